#include "resbench/router.hpp"

#include <algorithm>
#include <set>

namespace resbench {

namespace {

// Shortest wire path from `a` to `b` over the induced coupler adjacency.
// Among equal-length options the next hop with the smallest hardware index
// wins, which pins the route (and therefore the circuit) exactly.
std::vector<int> shortest_wire_path(const std::vector<std::vector<int>>& wire_adj,
                                    const std::vector<int>& hw, int a, int b) {
  const int n = static_cast<int>(wire_adj.size());
  std::vector<int> dist(n, -1);
  dist[b] = 0;
  std::vector<int> frontier{b};
  while (!frontier.empty() && dist[a] < 0) {
    std::vector<int> next;
    for (int w : frontier) {
      for (int u : wire_adj[w]) {
        if (dist[u] < 0) {
          dist[u] = dist[w] + 1;
          next.push_back(u);
        }
      }
    }
    frontier = std::move(next);
  }
  if (dist[a] < 0) {
    throw NoPath("no coupler path between mapped qubits");
  }
  std::vector<int> path{a};
  int cur = a;
  while (cur != b) {
    int best = -1;
    for (int u : wire_adj[cur]) {
      if (dist[u] == dist[cur] - 1 && (best < 0 || hw[u] < hw[best])) {
        best = u;
      }
    }
    path.push_back(best);
    cur = best;
  }
  return path;
}

}  // namespace

Circuit route_cnots(const HardwareTopology& topo, const Circuit& circ,
                    const std::vector<int>& hardware_map) {
  const int n = circ.width;
  if (static_cast<int>(hardware_map.size()) != n) {
    throw ConfigError("hardware map size does not match circuit width");
  }
  std::set<int> distinct(hardware_map.begin(), hardware_map.end());
  if (static_cast<int>(distinct.size()) != n) {
    throw ConfigError("hardware map must assign distinct qubits");
  }
  for (int q : hardware_map) {
    if (q < 0 || q >= topo.n_qubits) {
      throw VertexOutOfRange("hardware map names qubit " + std::to_string(q));
    }
  }

  std::vector<std::vector<int>> wire_adj(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && topo.adjacent(hardware_map[a], hardware_map[b])) {
        wire_adj[a].push_back(b);
      }
    }
  }

  std::vector<int> wire_of(n);   // logical -> wire
  std::vector<int> logical_at(n);  // wire -> logical
  for (int i = 0; i < n; ++i) {
    wire_of[i] = i;
    logical_at[i] = i;
  }
  auto do_swap = [&](Circuit& out, int w1, int w2) {
    out.swap(w1, w2);
    const int l1 = logical_at[w1];
    const int l2 = logical_at[w2];
    std::swap(logical_at[w1], logical_at[w2]);
    wire_of[l1] = w2;
    wire_of[l2] = w1;
  };

  Circuit out;
  out.width = n;
  out.meta = circ.meta;
  out.meta.hardware_map = hardware_map;
  for (const Gate& g : circ.gates) {
    switch (g.kind) {
      case GateKind::Barrier:
        out.barrier();
        break;
      case GateKind::Measure:
        out.measure(wire_of[g.q0], g.cbit);
        break;
      case GateKind::CNOT: {
        int a = wire_of[g.q0];
        const int b = wire_of[g.q1];
        if (!topo.adjacent(hardware_map[a], hardware_map[b])) {
          const std::vector<int> path = shortest_wire_path(wire_adj, hardware_map, a, b);
          for (size_t k = 0; k + 2 < path.size(); ++k) {
            do_swap(out, path[k], path[k + 1]);
          }
          a = path[path.size() - 2];
        }
        out.cnot(a, b);
        break;
      }
      case GateKind::SWAP:
        throw ConfigError("router input must be an unrouted circuit (no SWAPs)");
      default:
        out.add({g.kind, wire_of[g.q0]});
        break;
    }
  }
  out.meta.layout = wire_of;
  out.meta.cnot_count = out.count_cnots();
  return out;
}

}  // namespace resbench
