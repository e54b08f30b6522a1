#include "resbench/noise.hpp"

#include <algorithm>

namespace resbench {

NoiseModel NoiseModel::ideal(int n_qubits) {
  NoiseModel m;
  m.sq_depol.assign(n_qubits, 0.0);
  m.readout.assign(n_qubits, {0.0, 0.0});
  return m;
}

NoiseModel NoiseModel::from_topology(const HardwareTopology& topo) {
  NoiseModel m = ideal(topo.n_qubits);
  m.readout = topo.readout_err;
  for (auto [i, j, p] : topo.cnot_err) {
    m.cnot_depol[std::minmax(i, j)] = p;
  }
  return m;
}

double NoiseModel::cnot_error(int a, int b) const {
  auto it = cnot_depol.find(std::minmax(a, b));
  return it == cnot_depol.end() ? 0.0 : it->second;
}

double NoiseModel::sq_error(int q) const {
  return q < static_cast<int>(sq_depol.size()) ? sq_depol[q] : 0.0;
}

std::pair<double, double> NoiseModel::readout_error(int q) const {
  return q < static_cast<int>(readout.size()) ? readout[q] : std::pair<double, double>{0.0, 0.0};
}

bool NoiseModel::noiseless() const {
  for (const auto& [k, p] : cnot_depol) {
    if (p > 0.0) return false;
  }
  for (double p : sq_depol) {
    if (p > 0.0) return false;
  }
  for (auto [e0, e1] : readout) {
    if (e0 > 0.0 || e1 > 0.0) return false;
  }
  return true;
}

void NoiseModel::validate() const {
  auto in_range = [](double p) { return p >= 0.0 && p <= 1.0; };
  for (const auto& [k, p] : cnot_depol) {
    if (!in_range(p)) throw ConfigError("cnot depolarizing probability outside [0, 1]");
  }
  for (double p : sq_depol) {
    if (!in_range(p)) throw ConfigError("single-qubit depolarizing probability outside [0, 1]");
  }
  for (auto [e0, e1] : readout) {
    if (!in_range(e0) || !in_range(e1)) throw ConfigError("readout probability outside [0, 1]");
  }
}

}  // namespace resbench
