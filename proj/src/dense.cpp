#include "resbench/dense.hpp"

#include <array>
#include <bit>
#include <cmath>

namespace resbench {

namespace {

using cd = std::complex<double>;
constexpr double kInvSqrt2 = 0.70710678118654752440;

struct GateMatrix {
  cd m[2][2];
};

GateMatrix matrix_for(GateKind k) {
  const cd i(0.0, 1.0);
  switch (k) {
    case GateKind::H:
      return {{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}};
    case GateKind::S:
      return {{{1.0, 0.0}, {0.0, i}}};
    case GateKind::Sdg:
      return {{{1.0, 0.0}, {0.0, -i}}};
    case GateKind::RXp:  // exp(+i pi/4 X)
      return {{{kInvSqrt2, i * kInvSqrt2}, {i * kInvSqrt2, kInvSqrt2}}};
    case GateKind::RXm:  // exp(-i pi/4 X)
      return {{{kInvSqrt2, -i * kInvSqrt2}, {-i * kInvSqrt2, kInvSqrt2}}};
    case GateKind::RZp:  // exp(+i pi/4 Z)
      return {{{std::polar(1.0, M_PI / 4), 0.0}, {0.0, std::polar(1.0, -M_PI / 4)}}};
    case GateKind::RZm:
      return {{{std::polar(1.0, -M_PI / 4), 0.0}, {0.0, std::polar(1.0, M_PI / 4)}}};
    default:
      throw NonCliffordGate("no dense matrix for this gate kind");
  }
}

}  // namespace

Statevector::Statevector(int n) : n_(n) {
  if (n < 1 || n > kMaxQubits) {
    throw TooLarge("dense statevector capped at " + std::to_string(kMaxQubits) + " qubits");
  }
  amps_.assign(1ull << n, cd(0.0, 0.0));
  amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(int n, std::vector<cd> amps) {
  Statevector out(n);
  if (amps.size() != out.amps_.size()) {
    throw LengthMismatch("amplitude buffer size does not match qubit count");
  }
  out.amps_ = std::move(amps);
  return out;
}

void Statevector::apply_1q(int q, const cd m[2][2]) {
  const uint64_t bit = 1ull << q;
  for (uint64_t idx = 0; idx < amps_.size(); ++idx) {
    if (idx & bit) continue;
    const cd a0 = amps_[idx];
    const cd a1 = amps_[idx | bit];
    amps_[idx] = m[0][0] * a0 + m[0][1] * a1;
    amps_[idx | bit] = m[1][0] * a0 + m[1][1] * a1;
  }
}

void Statevector::apply(const Gate& g) {
  switch (g.kind) {
    case GateKind::CNOT: {
      const uint64_t cb = 1ull << g.q0;
      const uint64_t tb = 1ull << g.q1;
      for (uint64_t idx = 0; idx < amps_.size(); ++idx) {
        if ((idx & cb) && !(idx & tb)) {
          std::swap(amps_[idx], amps_[idx | tb]);
        }
      }
      break;
    }
    case GateKind::SWAP: {
      const uint64_t ab = 1ull << g.q0;
      const uint64_t bb = 1ull << g.q1;
      for (uint64_t idx = 0; idx < amps_.size(); ++idx) {
        if ((idx & ab) && !(idx & bb)) {
          std::swap(amps_[idx], amps_[(idx & ~ab) | bb]);
        }
      }
      break;
    }
    case GateKind::Barrier:
    case GateKind::Measure:
      throw NonCliffordGate("statevector applies unitary gates only");
    default: {
      GateMatrix m = matrix_for(g.kind);
      apply_1q(g.q0, m.m);
      break;
    }
  }
}

void Statevector::apply_unitaries(const Circuit& c) {
  for (const Gate& g : c.gates) {
    if (is_unitary(g.kind)) {
      apply(g);
    }
  }
}

void Statevector::apply_pauli(const PauliString& p) {
  if (p.n != n_) {
    throw LengthMismatch("pauli length does not match statevector");
  }
  std::vector<cd> out(amps_.size());
  const cd i(0.0, 1.0);
  for (uint64_t idx = 0; idx < amps_.size(); ++idx) {
    cd coef = p.sign < 0 ? cd(-1.0, 0.0) : cd(1.0, 0.0);
    uint64_t rest = p.support();
    while (rest) {
      const int q = std::countr_zero(rest);
      rest &= rest - 1;
      const bool bit = (idx >> q) & 1ull;
      switch (p.letter(q)) {
        case 'Z':
          if (bit) coef = -coef;
          break;
        case 'Y':
          coef *= bit ? -i : i;
          break;
        default:
          break;  // X permutes only
      }
    }
    out[idx ^ p.x] += coef * amps_[idx];
  }
  amps_ = std::move(out);
}

std::complex<double> Statevector::inner(const Statevector& other) const {
  if (n_ != other.n_) {
    throw LengthMismatch("statevector sizes differ");
  }
  cd total(0.0, 0.0);
  for (uint64_t idx = 0; idx < amps_.size(); ++idx) {
    total += std::conj(amps_[idx]) * other.amps_[idx];
  }
  return total;
}

double dense_oracle(const Circuit& circ, const PauliString& p) {
  Statevector psi(circ.width);
  psi.apply_unitaries(circ);
  Statevector phi = psi;
  phi.apply_pauli(p);
  return psi.inner(phi).real();
}

Statevector permute_wires(const Statevector& state, const std::vector<int>& wire_of_logical) {
  const int n = state.qubit_count();
  if (static_cast<int>(wire_of_logical.size()) != n) {
    throw LengthMismatch("layout size does not match statevector");
  }
  std::vector<cd> amps(1ull << n, cd(0.0, 0.0));
  for (uint64_t idx = 0; idx < (1ull << n); ++idx) {
    uint64_t to = 0;
    for (int l = 0; l < n; ++l) {
      if ((idx >> wire_of_logical[l]) & 1ull) {
        to |= 1ull << l;
      }
    }
    amps[to] = state.amplitude(idx);
  }
  return Statevector::from_amplitudes(n, std::move(amps));
}

double dense_noisy_expectation(const Circuit& circ, const NoiseModel& noise, uint64_t support) {
  // Density-matrix evolution; dimension 2^n with n capped well below the
  // statevector limit since rho is quadratically larger.
  const int n = circ.width;
  if (n > 8) {
    throw TooLarge("dense noisy oracle capped at 8 qubits");
  }
  const uint64_t dim = 1ull << n;
  std::vector<cd> rho(dim * dim, cd(0.0, 0.0));
  rho[0] = 1.0;

  auto apply_unitary_rows = [&](const Gate& g, std::vector<cd>& m, bool conj_side) {
    // Applies g to row indices (conj_side=false) or conjugated to columns.
    auto one_qubit = [&](int q, GateMatrix gm) {
      if (conj_side) {
        for (auto& r : gm.m) {
          for (auto& v : r) v = std::conj(v);
        }
      }
      const uint64_t bit = 1ull << q;
      if (!conj_side) {
        for (uint64_t col = 0; col < dim; ++col) {
          for (uint64_t row = 0; row < dim; ++row) {
            if (row & bit) continue;
            const cd a0 = m[row * dim + col];
            const cd a1 = m[(row | bit) * dim + col];
            m[row * dim + col] = gm.m[0][0] * a0 + gm.m[0][1] * a1;
            m[(row | bit) * dim + col] = gm.m[1][0] * a0 + gm.m[1][1] * a1;
          }
        }
      } else {
        for (uint64_t row = 0; row < dim; ++row) {
          for (uint64_t col = 0; col < dim; ++col) {
            if (col & bit) continue;
            const cd a0 = m[row * dim + col];
            const cd a1 = m[row * dim + (col | bit)];
            m[row * dim + col] = gm.m[0][0] * a0 + gm.m[0][1] * a1;
            m[row * dim + (col | bit)] = gm.m[1][0] * a0 + gm.m[1][1] * a1;
          }
        }
      }
    };
    auto permute = [&](auto&& index_map) {
      std::vector<cd> out(dim * dim, cd(0.0, 0.0));
      if (!conj_side) {
        for (uint64_t row = 0; row < dim; ++row) {
          const uint64_t to = index_map(row);
          for (uint64_t col = 0; col < dim; ++col) {
            out[to * dim + col] = m[row * dim + col];
          }
        }
      } else {
        for (uint64_t col = 0; col < dim; ++col) {
          const uint64_t to = index_map(col);
          for (uint64_t row = 0; row < dim; ++row) {
            out[row * dim + to] = m[row * dim + col];
          }
        }
      }
      m = std::move(out);
    };
    switch (g.kind) {
      case GateKind::CNOT: {
        const uint64_t cb = 1ull << g.q0;
        const uint64_t tb = 1ull << g.q1;
        permute([&](uint64_t i) { return (i & cb) ? (i ^ tb) : i; });
        break;
      }
      case GateKind::SWAP: {
        const uint64_t ab = 1ull << g.q0;
        const uint64_t bb = 1ull << g.q1;
        permute([&](uint64_t i) {
          const bool a = i & ab;
          const bool b = i & bb;
          if (a == b) return i;
          return i ^ ab ^ bb;
        });
        break;
      }
      default:
        one_qubit(g.q0, matrix_for(g.kind));
        break;
    }
  };

  auto apply_gate = [&](const Gate& g) {
    apply_unitary_rows(g, rho, false);
    apply_unitary_rows(g, rho, true);
  };

  auto apply_pauli_rows = [&](uint64_t xmask, uint64_t zmask, std::vector<cd>& m) {
    // P rho P for Pauli with given x/z masks (sign squares away on the
    // conjugated side, but phases matter per side).
    std::vector<cd> out(dim * dim, cd(0.0, 0.0));
    auto coef_for = [&](uint64_t idx) {
      cd coef(1.0, 0.0);
      const cd i(0.0, 1.0);
      uint64_t rest = xmask | zmask;
      while (rest) {
        const int q = std::countr_zero(rest);
        rest &= rest - 1;
        const bool bit = (idx >> q) & 1ull;
        const bool xb = (xmask >> q) & 1ull;
        const bool zb = (zmask >> q) & 1ull;
        if (xb && zb) {
          coef *= bit ? -i : i;
        } else if (zb && bit) {
          coef = -coef;
        }
      }
      return coef;
    };
    for (uint64_t row = 0; row < dim; ++row) {
      const cd rc = coef_for(row);
      for (uint64_t col = 0; col < dim; ++col) {
        const cd cc = std::conj(coef_for(col));
        out[(row ^ xmask) * dim + (col ^ xmask)] += rc * cc * m[row * dim + col];
      }
    }
    m = std::move(out);
  };

  auto depolarize = [&](std::vector<int> qubits, double p) {
    if (p <= 0.0) return;
    const int terms = qubits.size() == 1 ? 3 : 15;
    std::vector<cd> mixed(dim * dim, cd(0.0, 0.0));
    for (int t = 1; t <= terms; ++t) {
      uint64_t xmask = 0;
      uint64_t zmask = 0;
      int code = t;
      for (int q : qubits) {
        if (code & 1) xmask |= 1ull << q;
        if (code & 2) zmask |= 1ull << q;
        code >>= 2;
      }
      std::vector<cd> term = rho;
      apply_pauli_rows(xmask, zmask, term);
      for (uint64_t i = 0; i < dim * dim; ++i) {
        mixed[i] += term[i];
      }
    }
    const double keep = 1.0 - p;
    const double each = p / terms;
    for (uint64_t i = 0; i < dim * dim; ++i) {
      rho[i] = keep * rho[i] + each * mixed[i];
    }
  };

  auto hw = [&](int wire) {
    if (wire < static_cast<int>(circ.meta.hardware_map.size())) {
      return circ.meta.hardware_map[wire];
    }
    return wire;
  };

  std::vector<int> wire_of_cbit(n, -1);
  // Same SWAP expansion and noise placement as the sampler.
  for (const Gate& raw : circ.gates) {
    std::vector<Gate> expanded;
    if (raw.kind == GateKind::SWAP) {
      expanded = {{GateKind::CNOT, raw.q0, raw.q1},
                  {GateKind::CNOT, raw.q1, raw.q0},
                  {GateKind::CNOT, raw.q0, raw.q1}};
    } else {
      expanded = {raw};
    }
    for (const Gate& g : expanded) {
      if (g.kind == GateKind::Barrier) {
        continue;
      }
      if (g.kind == GateKind::Measure) {
        wire_of_cbit[g.cbit] = g.q0;
        continue;
      }
      apply_gate(g);
      if (g.kind == GateKind::CNOT) {
        depolarize({g.q0, g.q1}, noise.cnot_error(hw(g.q0), hw(g.q1)));
      } else if (is_single_qubit(g.kind)) {
        depolarize({g.q0}, noise.sq_error(hw(g.q0)));
      }
    }
  }

  std::vector<double> probs(dim, 0.0);
  for (uint64_t i = 0; i < dim; ++i) {
    probs[i] = rho[i * dim + i].real();
  }
  // Readout confusion per measured wire.
  for (int c = 0; c < n; ++c) {
    const int wire = wire_of_cbit[c];
    if (wire < 0) {
      throw ConfigError("noisy oracle requires every classical bit measured");
    }
    auto [e0, e1] = noise.readout_error(hw(wire));
    if (e0 <= 0.0 && e1 <= 0.0) continue;
    const uint64_t bit = 1ull << wire;
    for (uint64_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const double p0 = probs[i];
      const double p1 = probs[i | bit];
      probs[i] = (1.0 - e0) * p0 + e1 * p1;
      probs[i | bit] = e0 * p0 + (1.0 - e1) * p1;
    }
  }

  double total = 0.0;
  for (uint64_t i = 0; i < dim; ++i) {
    int parity = 0;
    uint64_t rest = support;
    while (rest) {
      const int c = std::countr_zero(rest);
      rest &= rest - 1;
      parity ^= static_cast<int>((i >> wire_of_cbit[c]) & 1ull);
    }
    total += parity ? -probs[i] : probs[i];
  }
  return total;
}

}  // namespace resbench
