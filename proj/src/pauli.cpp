#include "resbench/pauli.hpp"

#include <bit>

namespace resbench {

PauliString PauliString::identity(int n) {
  if (n < 1 || n > 64) {
    throw TooLarge("pauli string length out of range: " + std::to_string(n));
  }
  PauliString p;
  p.n = n;
  return p;
}

PauliString PauliString::from_string(std::string_view s) {
  int sign = +1;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    sign = s.front() == '-' ? -1 : +1;
    s.remove_prefix(1);
  }
  PauliString p = identity(static_cast<int>(s.size()));
  p.sign = sign;
  for (size_t q = 0; q < s.size(); ++q) {
    p.set_letter(static_cast<int>(q), s[q]);
  }
  return p;
}

char PauliString::letter(int q) const {
  const bool xb = (x >> q) & 1ull;
  const bool zb = (z >> q) & 1ull;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

void PauliString::set_letter(int q, char c) {
  if (q < 0 || q >= n) {
    throw LengthMismatch("pauli letter index out of range");
  }
  const uint64_t bit = 1ull << q;
  x &= ~bit;
  z &= ~bit;
  switch (c) {
    case 'I': break;
    case 'X': x |= bit; break;
    case 'Y': x |= bit; z |= bit; break;
    case 'Z': z |= bit; break;
    default:
      throw ConfigError(std::string("invalid pauli letter '") + c + "'");
  }
}

int PauliString::weight() const {
  return std::popcount(support());
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n != other.n) {
    throw LengthMismatch("pauli string lengths differ");
  }
  int anti = std::popcount(x & other.z) + std::popcount(z & other.x);
  return (anti & 1) == 0;
}

std::string PauliString::str() const {
  std::string s(sign < 0 ? "-" : "+");
  for (int q = 0; q < n; ++q) {
    s += letter(q);
  }
  return s;
}

}  // namespace resbench
