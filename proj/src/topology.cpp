#include "resbench/topology.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace resbench {

bool HardwareTopology::adjacent(int a, int b) const {
  for (auto [i, j] : couplers) {
    if ((i == a && j == b) || (i == b && j == a)) {
      return true;
    }
  }
  return false;
}

double HardwareTopology::cnot_error(int a, int b) const {
  for (auto [i, j, p] : cnot_err) {
    if ((i == a && j == b) || (i == b && j == a)) {
      return p;
    }
  }
  return 0.0;
}

Graph HardwareTopology::coupling_graph() const {
  Graph g(n_qubits);
  for (auto [i, j] : couplers) {
    g.add_edge(i, j);
  }
  return g;
}

void HardwareTopology::validate() const {
  if (n_qubits < 1 || n_qubits > Graph::kMaxVertices) {
    throw ConfigError("topology qubit count out of range: " + std::to_string(n_qubits));
  }
  std::set<std::pair<int, int>> seen;
  uint64_t named = 0;
  for (auto [i, j] : couplers) {
    if (i < 0 || j < 0 || i >= n_qubits || j >= n_qubits) {
      throw ConfigError("coupler endpoint out of range");
    }
    if (i == j) {
      throw ConfigError("coupler with equal endpoints");
    }
    auto k = std::minmax(i, j);
    if (!seen.insert({k.first, k.second}).second) {
      throw ConfigError("duplicate coupler " + std::to_string(i) + "-" + std::to_string(j));
    }
    named |= (1ull << i) | (1ull << j);
  }
  if (static_cast<int>(readout_err.size()) != n_qubits) {
    throw ConfigError("readout_err must list one (eps0, eps1) pair per qubit");
  }
  for (auto [e0, e1] : readout_err) {
    if (e0 < 0.0 || e0 > 1.0 || e1 < 0.0 || e1 > 1.0) {
      throw ConfigError("readout error outside [0, 1]");
    }
  }
  for (auto [i, j, p] : cnot_err) {
    if (!adjacent(i, j)) {
      throw ConfigError("cnot_err entry " + std::to_string(i) + "-" + std::to_string(j) +
                        " names a pair that is not a coupler");
    }
    if (p < 0.0 || p > 1.0) {
      throw ConfigError("cnot error outside [0, 1]");
    }
  }
  // Connectivity over every qubit named in any coupler.
  if (named) {
    Graph g = coupling_graph();
    int start = std::countr_zero(named);
    uint64_t visited = 1ull << start;
    uint64_t frontier = visited;
    while (frontier) {
      uint64_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.neighbors(v);
      }
      frontier = next & ~visited;
      visited |= next;
    }
    if ((visited & named) != named) {
      throw ConfigError("coupling map is not connected");
    }
  }
}

HardwareTopology HardwareTopology::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open topology file: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

HardwareTopology HardwareTopology::parse(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("topology JSON parse error: ") + e.what());
  }
  HardwareTopology t;
  try {
    t.name = j.at("name").get<std::string>();
    t.n_qubits = j.at("n_qubits").get<int>();
    for (const auto& c : j.at("couplers")) {
      t.couplers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    }
    for (const auto& r : j.at("readout_err")) {
      t.readout_err.emplace_back(r.at(0).get<double>(), r.at(1).get<double>());
    }
    for (const auto& c : j.at("cnot_err")) {
      t.cnot_err.emplace_back(c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("topology JSON malformed: ") + e.what());
  }
  t.validate();
  return t;
}

std::string HardwareTopology::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["n_qubits"] = n_qubits;
  auto& cs = j["couplers"] = nlohmann::json::array();
  for (auto [i, k] : couplers) {
    cs.push_back({i, k});
  }
  auto& rs = j["readout_err"] = nlohmann::json::array();
  for (auto [e0, e1] : readout_err) {
    rs.push_back({e0, e1});
  }
  auto& es = j["cnot_err"] = nlohmann::json::array();
  for (auto [i, k, p] : cnot_err) {
    es.push_back({i, k, p});
  }
  return j.dump(2);
}

std::pair<Graph, std::vector<int>> induced_subgraph(const HardwareTopology& topo,
                                                    const std::vector<int>& qubits) {
  if (qubits.empty()) {
    throw ConfigError("qubit subset is empty");
  }
  std::set<int> distinct(qubits.begin(), qubits.end());
  if (distinct.size() != qubits.size()) {
    throw ConfigError("qubit subset has duplicates");
  }
  for (int q : qubits) {
    if (q < 0 || q >= topo.n_qubits) {
      throw VertexOutOfRange("qubit " + std::to_string(q) + " not on topology " + topo.name);
    }
  }
  const int n = static_cast<int>(qubits.size());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (topo.adjacent(qubits[i], qubits[j])) {
        g.add_edge(i, j);
      }
    }
  }
  if (!g.connected()) {
    throw DisconnectedSubgraph("qubit subset induces a disconnected graph on " + topo.name);
  }
  return {g, qubits};
}

}  // namespace resbench
