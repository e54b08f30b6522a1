#pragma once

#include <cstdint>
#include <vector>

#include "resbench/circuit.hpp"
#include "resbench/graph.hpp"
#include "resbench/pauli.hpp"

namespace resbench {

// Stabilizer tableau over n <= 64 qubits: n destabilizer rows followed by n
// stabilizer rows in binary symplectic form with sign bits. Starts in |0...0>.
class StabilizerState {
 public:
  explicit StabilizerState(int n);

  int qubit_count() const { return n_; }

  void h(int q);
  void s(int q);
  void sdg(int q);
  void x(int q);
  void z(int q);
  void cnot(int c, int t);
  void cz(int a, int b);
  void swap_qubits(int a, int b);
  void rx_pos(int q);  // exp(+i pi/4 X)
  void rx_neg(int q);  // exp(-i pi/4 X)
  void rz_pos(int q);  // exp(+i pi/4 Z)
  void rz_neg(int q);  // exp(-i pi/4 Z)

  // Unitary gates only; throws NonCliffordGate for Barrier/Measure.
  void apply(const Gate& g);
  // Applies every unitary gate of the circuit; barriers and measurements are
  // skipped (the state is left just before readout).
  void apply_unitaries(const Circuit& c);

  struct MeasureResult {
    int outcome;
    bool deterministic;
  };
  // Computational-basis measurement of qubit q. `random_bit` supplies the
  // outcome when it is not determined by the state.
  MeasureResult measure_z(int q, int random_bit);

  // +1/-1 when +-p lies in the stabilizer group, 0 when p anticommutes with
  // some stabilizer. Throws LengthMismatch when sizes differ.
  int expectation(const PauliString& p) const;

  // |g>: H on every qubit, then CZ along each edge.
  static StabilizerState graph_state(const Graph& g);

 private:
  struct Row {
    uint64_t x = 0;
    uint64_t z = 0;
    int r = 0;  // sign bit: 0 -> +1, 1 -> -1
  };

  // dst := src * dst with exact sign tracking (phases stay real here).
  static void multiply_into(Row& dst, const Row& src);

  int n_;
  std::vector<Row> rows_;  // 0..n-1 destabilizers, n..2n-1 stabilizers
};

}  // namespace resbench
