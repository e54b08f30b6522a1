#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "resbench/graph.hpp"

namespace resbench {

// Device connectivity plus per-qubit readout error pairs and per-coupler CNOT
// error rates. File schema (JSON):
//   { "name": str, "n_qubits": int, "couplers": [[i,j],...],
//     "readout_err": [[eps0,eps1],...], "cnot_err": [[i,j,p],...] }
struct HardwareTopology {
  std::string name;
  int n_qubits = 0;
  std::vector<std::pair<int, int>> couplers;
  std::vector<std::pair<double, double>> readout_err;  // (P(1|0), P(0|1)) per qubit
  std::vector<std::tuple<int, int, double>> cnot_err;  // depolarizing p per coupler

  bool adjacent(int a, int b) const;
  double cnot_error(int a, int b) const;  // 0 when unlisted
  Graph coupling_graph() const;
  void validate() const;  // throws ConfigError on any violation

  static HardwareTopology load(const std::string& path);
  static HardwareTopology parse(const std::string& json_text);
  std::string to_json() const;
};

// Restriction of the coupling map to `qubits`; local vertex i corresponds to
// qubits[i], and the returned map records local -> hardware indices. Throws
// DisconnectedSubgraph when the restriction is not connected.
std::pair<Graph, std::vector<int>> induced_subgraph(const HardwareTopology& topo,
                                                    const std::vector<int>& qubits);

}  // namespace resbench
