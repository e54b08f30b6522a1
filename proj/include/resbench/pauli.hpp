#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "resbench/errors.hpp"

namespace resbench {

// Signed Pauli string over {I, X, Y, Z}^n with phase +1 or -1. Letters are
// stored symplectically: bit q of `x` set means an X component on qubit q,
// bit q of `z` a Z component; both set is Y.
struct PauliString {
  int n = 0;
  uint64_t x = 0;
  uint64_t z = 0;
  int sign = +1;

  static PauliString identity(int n);
  static PauliString from_string(std::string_view s);  // "[+-]?[IXYZ]+"

  char letter(int q) const;
  void set_letter(int q, char c);
  int weight() const;                          // count of non-identity letters
  uint64_t support() const { return x | z; }   // non-identity positions
  bool commutes_with(const PauliString& other) const;
  std::string str() const;  // sign prefix + letters, e.g. "+XZI"

  bool operator==(const PauliString&) const = default;
};

}  // namespace resbench
