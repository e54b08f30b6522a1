#include "resbench/builder.hpp"

#include <bit>

#include "resbench/router.hpp"
#include "resbench/witness.hpp"

namespace resbench {

Circuit build_graph_state_circuit(const Graph& g) {
  if (!g.connected()) {
    throw DisconnectedGraph("graph state circuits need a connected graph");
  }
  Circuit c;
  c.width = g.size();
  for (int q = 0; q < g.size(); ++q) {
    c.h(q);
  }
  c.barrier();
  for (auto [i, j] : g.edges()) {
    c.h(j);
    c.cnot(i, j);
    c.h(j);
  }
  c.meta.base_edges = g.edges();
  c.meta.target_edges = g.edges();
  c.meta.hardware_map.resize(g.size());
  c.meta.layout.resize(g.size());
  for (int q = 0; q < g.size(); ++q) {
    c.meta.hardware_map[q] = q;
    c.meta.layout[q] = q;
  }
  c.meta.cnot_count = g.edge_count();
  return c;
}

Circuit build_naive_circuit(const HardwareTopology& topo, const std::vector<int>& qubits,
                            const LcSequence& seq) {
  auto [base, map] = induced_subgraph(topo, qubits);
  const Graph target = apply_lc_sequence(base, seq);
  Circuit c = build_graph_state_circuit(target);
  c.meta.method = "naive";
  c.meta.base_edges = base.edges();
  c.meta.target_edges = target.edges();
  c.meta.lc_seq = seq.ops;
  Circuit routed = route_cnots(topo, c, map);
  return routed;
}

Circuit build_unitary_circuit(const HardwareTopology& topo, const std::vector<int>& qubits,
                              const LcSequence& seq) {
  auto [base, map] = induced_subgraph(topo, qubits);
  Circuit c = build_graph_state_circuit(base);
  Graph current = base;
  for (int a : seq.ops) {
    c.barrier();
    c.rx_neg(a);
    uint64_t nb = current.neighbors(a);
    while (nb) {
      const int b = std::countr_zero(nb);
      nb &= nb - 1;
      c.rz_pos(b);
    }
    current = local_complement(current, a);
  }
  c.meta.method = "unitary";
  c.meta.base_edges = base.edges();
  c.meta.target_edges = current.edges();
  c.meta.lc_seq = seq.ops;
  c.meta.hardware_map = map;
  c.meta.cnot_count = base.edge_count();
  return c;
}

Circuit with_stabilizer_measurement(Circuit prep, const PauliString& p) {
  if (p.n != prep.width) {
    throw LengthMismatch("stabilizer length does not match circuit width");
  }
  std::vector<int> layout = prep.meta.layout;
  if (layout.empty()) {
    layout.resize(prep.width);
    for (int q = 0; q < prep.width; ++q) {
      layout[q] = q;
    }
  }
  prep.barrier();
  for (const Gate& g : measurement_basis(p)) {
    prep.add({g.kind, layout[g.q0]});
  }
  for (int l = 0; l < prep.width; ++l) {
    prep.measure(layout[l], l);
  }
  return prep;
}

}  // namespace resbench
