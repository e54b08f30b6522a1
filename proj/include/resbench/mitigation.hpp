#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "resbench/sampler.hpp"
#include "resbench/topology.hpp"

namespace resbench {

// Tensored readout mitigator: one 2x2 column-stochastic assignment matrix
// A_q = [[1-e0, e1], [e0, 1-e1]] per qubit, inverted qubit by qubit. The full
// 2^n x 2^n matrix is never materialized.
class TensoredMitigator {
 public:
  explicit TensoredMitigator(std::vector<std::pair<double, double>> rates);
  static TensoredMitigator identity(int n);

  int qubit_count() const { return static_cast<int>(rates_.size()); }
  const std::vector<std::pair<double, double>>& rates() const { return rates_; }

  std::string to_json() const;  // [[e0, e1], ...]
  static TensoredMitigator from_json(const std::string& text);

 private:
  std::vector<std::pair<double, double>> rates_;
};

// Apply the inverse assignment matrices to the normalized counts. The output
// sums to one and may carry negative entries (quasi-probabilities).
QuasiDist mitigate_counts(const TensoredMitigator& m, const Counts& counts);
QuasiDist mitigate_quasi(const TensoredMitigator& m, const QuasiDist& dist);

// Estimate per-qubit flip rates by running the |0...0> and |1...1>
// calibration circuits through the simulated backend.
TensoredMitigator calibrate(const HardwareTopology& topo, const std::vector<int>& qubits,
                            long long shots, uint64_t seed);

// Clip to the physical interval [-1, 1].
double clamp_expectation(double x);

}  // namespace resbench
