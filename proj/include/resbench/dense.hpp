#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "resbench/circuit.hpp"
#include "resbench/noise.hpp"
#include "resbench/pauli.hpp"

namespace resbench {

// Reference simulators used by tests only: full state-vector evolution and,
// for noisy checks, exact density-matrix evolution with depolarizing channels
// and readout confusion. Qubit q is bit q of the basis index.
class Statevector {
 public:
  static constexpr int kMaxQubits = 12;

  explicit Statevector(int n);  // |0...0>
  static Statevector from_amplitudes(int n, std::vector<std::complex<double>> amps);

  int qubit_count() const { return n_; }
  void apply(const Gate& g);
  // Applies the unitary gates; barriers and measurements are skipped.
  void apply_unitaries(const Circuit& c);
  void apply_pauli(const PauliString& p);

  std::complex<double> amplitude(uint64_t idx) const { return amps_[idx]; }
  double probability(uint64_t idx) const { return std::norm(amps_[idx]); }
  std::complex<double> inner(const Statevector& other) const;  // <this|other>

 private:
  void apply_1q(int q, const std::complex<double> m[2][2]);

  int n_;
  std::vector<std::complex<double>> amps_;
};

// Exact <psi|P|psi> for the pre-measurement state of the circuit.
double dense_oracle(const Circuit& circ, const PauliString& p);

// Reindex wires to logical order: bit l of the result index reads bit
// wire_of_logical[l] of the input index.
Statevector permute_wires(const Statevector& state, const std::vector<int>& wire_of_logical);

// Exact expected parity over `support` (classical-bit mask) for the circuit
// run under the noise model: density-matrix evolution with depolarizing
// insertions at the sampler's noise sites plus readout confusion.
double dense_noisy_expectation(const Circuit& circ, const NoiseModel& noise, uint64_t support);

}  // namespace resbench
