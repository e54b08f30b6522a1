#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "resbench/circuit.hpp"
#include "resbench/noise.hpp"

namespace resbench {

// Bitstring -> shot count. Classical bit 0 is the leftmost character.
using Counts = std::map<std::string, long long>;
// Bitstring -> quasi-probability (may be negative after mitigation).
using QuasiDist = std::map<std::string, double>;

// Monte-Carlo shot sampling: one reference sample from the noiseless tableau,
// then per-shot Pauli frame propagation with stochastic noise insertion and
// readout flips. Exact for Clifford circuits with terminal measurements, and
// bit-identical for a fixed seed. Wires map to hardware qubits through
// circ.meta.hardware_map (identity when absent).
Counts sample_shots(const Circuit& circ, const NoiseModel& noise, long long shots,
                    uint64_t seed);

// counts scaled by 1/shots, key order preserved.
QuasiDist normalize_counts(const Counts& counts);

// Parity expectation over the classical bits in `support` (bitmask):
// sum over bitstrings of (-1)^{parity on support} * weight.
double expectation_from_quasi(const QuasiDist& dist, uint64_t support);
double expectation_from_counts(const Counts& counts, uint64_t support);

}  // namespace resbench
