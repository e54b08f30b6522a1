#pragma once

#include <map>
#include <utility>
#include <vector>

#include "resbench/topology.hpp"

namespace resbench {

// Stochastic Pauli noise. A uniformly random non-identity two-qubit Pauli is
// inserted after each CNOT with the coupler's probability (SWAPs count as
// three CNOTs), a random X/Y/Z after each single-qubit gate with sq_depol,
// and each readout bit flips independently with (eps0, eps1). All rates are
// indexed by hardware qubit.
struct NoiseModel {
  std::map<std::pair<int, int>, double> cnot_depol;  // key (min, max)
  std::vector<double> sq_depol;
  std::vector<std::pair<double, double>> readout;

  static NoiseModel ideal(int n_qubits);
  static NoiseModel from_topology(const HardwareTopology& topo);

  double cnot_error(int a, int b) const;  // 0 when unlisted
  double sq_error(int q) const;
  std::pair<double, double> readout_error(int q) const;
  bool noiseless() const;
  void validate() const;
};

}  // namespace resbench
