#include "resbench/tableau.hpp"

#include <bit>

namespace resbench {

StabilizerState::StabilizerState(int n) : n_(n), rows_(2 * static_cast<size_t>(n)) {
  if (n < 1 || n > 64) {
    throw TooLarge("tableau qubit count out of range: " + std::to_string(n));
  }
  for (int i = 0; i < n_; ++i) {
    rows_[i].x = 1ull << i;        // destabilizer X_i
    rows_[n_ + i].z = 1ull << i;   // stabilizer Z_i
  }
}

void StabilizerState::h(int q) {
  const uint64_t bit = 1ull << q;
  for (Row& row : rows_) {
    if ((row.x & bit) && (row.z & bit)) {
      row.r ^= 1;
    }
    const uint64_t xq = row.x & bit;
    const uint64_t zq = row.z & bit;
    row.x = (row.x & ~bit) | zq;
    row.z = (row.z & ~bit) | xq;
  }
}

void StabilizerState::s(int q) {
  const uint64_t bit = 1ull << q;
  for (Row& row : rows_) {
    if ((row.x & bit) && (row.z & bit)) {
      row.r ^= 1;
    }
    row.z ^= row.x & bit;
  }
}

void StabilizerState::sdg(int q) {
  const uint64_t bit = 1ull << q;
  for (Row& row : rows_) {
    if ((row.x & bit) && !(row.z & bit)) {
      row.r ^= 1;
    }
    row.z ^= row.x & bit;
  }
}

void StabilizerState::z(int q) {
  s(q);
  s(q);
}

void StabilizerState::x(int q) {
  h(q);
  z(q);
  h(q);
}

void StabilizerState::cnot(int c, int t) {
  const uint64_t cb = 1ull << c;
  const uint64_t tb = 1ull << t;
  for (Row& row : rows_) {
    const bool xc = row.x & cb;
    const bool zt = row.z & tb;
    if (xc && zt) {
      const bool xt = row.x & tb;
      const bool zc = row.z & cb;
      if (xt == zc) {
        row.r ^= 1;
      }
    }
    if (xc) {
      row.x ^= tb;
    }
    if (zt) {
      row.z ^= cb;
    }
  }
}

void StabilizerState::cz(int a, int b) {
  h(b);
  cnot(a, b);
  h(b);
}

void StabilizerState::swap_qubits(int a, int b) {
  cnot(a, b);
  cnot(b, a);
  cnot(a, b);
}

// exp(-i pi/4 X) maps Z -> -Y; realized as H S H.
void StabilizerState::rx_neg(int q) {
  h(q);
  s(q);
  h(q);
}

// exp(+i pi/4 X) maps Z -> +Y; realized as H Sdg H.
void StabilizerState::rx_pos(int q) {
  h(q);
  sdg(q);
  h(q);
}

// exp(+i pi/4 Z) acts as Sdg up to global phase.
void StabilizerState::rz_pos(int q) {
  sdg(q);
}

void StabilizerState::rz_neg(int q) {
  s(q);
}

void StabilizerState::apply(const Gate& g) {
  switch (g.kind) {
    case GateKind::H: h(g.q0); break;
    case GateKind::S: s(g.q0); break;
    case GateKind::Sdg: sdg(g.q0); break;
    case GateKind::RXp: rx_pos(g.q0); break;
    case GateKind::RXm: rx_neg(g.q0); break;
    case GateKind::RZp: rz_pos(g.q0); break;
    case GateKind::RZm: rz_neg(g.q0); break;
    case GateKind::CNOT: cnot(g.q0, g.q1); break;
    case GateKind::SWAP: swap_qubits(g.q0, g.q1); break;
    default:
      throw NonCliffordGate("tableau cannot apply non-unitary gate");
  }
}

void StabilizerState::apply_unitaries(const Circuit& c) {
  for (const Gate& g : c.gates) {
    if (is_unitary(g.kind)) {
      apply(g);
    }
  }
}

void StabilizerState::multiply_into(Row& dst, const Row& src) {
  // Exponent of i picked up multiplying src's letters onto dst's, per qubit:
  //   X*Y, Y*Z, Z*X contribute +1;  X*Z, Y*X, Z*Y contribute -1.
  const uint64_t sy = src.x & src.z;
  const uint64_t sX = src.x & ~src.z;
  const uint64_t sZ = ~src.x & src.z;
  const uint64_t dy = dst.x & dst.z;
  const uint64_t dX = dst.x & ~dst.z;
  const uint64_t dZ = ~dst.x & dst.z;
  const int plus = std::popcount(sX & dy) + std::popcount(sy & dZ) + std::popcount(sZ & dX);
  const int minus = std::popcount(sX & dZ) + std::popcount(sy & dX) + std::popcount(sZ & dy);
  const int e = ((plus - minus) % 4 + 4) % 4 + 2 * dst.r + 2 * src.r;
  dst.r = (e >> 1) & 1;  // products used here are always Hermitian (e even)
  dst.x ^= src.x;
  dst.z ^= src.z;
}

StabilizerState::MeasureResult StabilizerState::measure_z(int q, int random_bit) {
  const uint64_t bit = 1ull << q;
  int pivot = -1;
  for (int i = n_; i < 2 * n_; ++i) {
    if (rows_[i].x & bit) {
      pivot = i;
      break;
    }
  }
  if (pivot >= 0) {
    // Outcome is random; collapse onto (-1)^outcome Z_q.
    for (int i = 0; i < 2 * n_; ++i) {
      if (i != pivot && (rows_[i].x & bit)) {
        multiply_into(rows_[i], rows_[pivot]);
      }
    }
    rows_[pivot - n_] = rows_[pivot];
    rows_[pivot] = Row{0, bit, random_bit & 1};
    return {random_bit & 1, false};
  }
  // Deterministic: express Z_q as a product of stabilizers via destabilizers.
  Row acc;
  for (int i = 0; i < n_; ++i) {
    if (rows_[i].x & bit) {
      multiply_into(acc, rows_[n_ + i]);
    }
  }
  return {acc.r, true};
}

int StabilizerState::expectation(const PauliString& p) const {
  if (p.n != n_) {
    throw LengthMismatch("pauli length does not match register width");
  }
  for (int i = n_; i < 2 * n_; ++i) {
    const int anti = std::popcount(p.x & rows_[i].z) + std::popcount(p.z & rows_[i].x);
    if (anti & 1) {
      return 0;
    }
  }
  // p commutes with the whole group, so its letters are a product of
  // stabilizers; the destabilizer pairing picks the factors.
  Row acc;
  for (int i = 0; i < n_; ++i) {
    const int anti = std::popcount(p.x & rows_[i].z) + std::popcount(p.z & rows_[i].x);
    if (anti & 1) {
      multiply_into(acc, rows_[n_ + i]);
    }
  }
  const int psign = p.sign < 0 ? 1 : 0;
  return acc.r == psign ? +1 : -1;
}

StabilizerState StabilizerState::graph_state(const Graph& g) {
  StabilizerState st(g.size());
  for (int q = 0; q < g.size(); ++q) {
    st.h(q);
  }
  for (auto [i, j] : g.edges()) {
    st.cz(i, j);
  }
  return st;
}

}  // namespace resbench
