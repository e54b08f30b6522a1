#pragma once

#include <string>
#include <utility>
#include <vector>

#include "resbench/errors.hpp"

namespace resbench {

enum class GateKind {
  H,
  S,
  Sdg,
  RXp,  // exp(+i pi/4 X)
  RXm,  // exp(-i pi/4 X)
  RZp,  // exp(+i pi/4 Z)
  RZm,  // exp(-i pi/4 Z)
  CNOT,
  SWAP,
  Barrier,
  Measure,
};

struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;    // CNOT target / second SWAP qubit
  int cbit = -1;  // classical destination of a Measure
};

bool is_single_qubit(GateKind k);
bool is_unitary(GateKind k);  // false for Barrier and Measure
const char* gate_name(GateKind k);

struct CircuitMeta {
  std::string method;                             // "naive", "unitary" or empty
  std::vector<std::pair<int, int>> base_edges;    // graph the circuit started from
  std::vector<std::pair<int, int>> target_edges;  // graph actually prepared
  std::vector<int> lc_seq;
  std::vector<int> hardware_map;  // wire -> hardware qubit
  std::vector<int> layout;        // logical vertex -> wire (after routing)
  int cnot_count = 0;             // CNOTs, with each SWAP counted as three
};

// Ordered Clifford gate list over `width` wires.
struct Circuit {
  int width = 0;
  std::vector<Gate> gates;
  CircuitMeta meta;

  void add(Gate g);
  void h(int q) { add({GateKind::H, q}); }
  void s(int q) { add({GateKind::S, q}); }
  void sdg(int q) { add({GateKind::Sdg, q}); }
  void rx_pos(int q) { add({GateKind::RXp, q}); }
  void rx_neg(int q) { add({GateKind::RXm, q}); }
  void rz_pos(int q) { add({GateKind::RZp, q}); }
  void rz_neg(int q) { add({GateKind::RZm, q}); }
  void cnot(int c, int t) { add({GateKind::CNOT, c, t}); }
  void swap(int a, int b) { add({GateKind::SWAP, a, b}); }
  void barrier() { add({GateKind::Barrier}); }
  void measure(int q, int cbit) { add({GateKind::Measure, q, -1, cbit}); }

  int count_cnots() const;    // CNOT + 3 * SWAP
  bool measures_all() const;  // every wire measured exactly once

  // One gate per line: "h 0", "cx 0 1", "swap 1 2", "barrier",
  // "measure 2 -> 2". Stable across runs; used for golden tests.
  std::string dump() const;
};

}  // namespace resbench
