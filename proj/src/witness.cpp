#include "resbench/witness.hpp"

#include <bit>

namespace resbench {

std::vector<PauliString> generators(const Graph& g) {
  const int n = g.size();
  std::vector<PauliString> gens;
  gens.reserve(n);
  for (int k = 0; k < n; ++k) {
    PauliString p = PauliString::identity(n);
    p.x = 1ull << k;
    p.z = g.neighbors(k);
    gens.push_back(p);
  }
  return gens;
}

std::vector<PauliString> stabilizer_set(const Graph& g) {
  std::vector<PauliString> set = generators(g);
  set.push_back(PauliString::identity(g.size()));
  return set;
}

namespace {

// Conjugation by exp(-i pi/4 X) on one qubit: X -> X, Y -> Z, Z -> -Y.
void conjugate_rx_neg(PauliString& p, int q) {
  const uint64_t bit = 1ull << q;
  const bool xb = p.x & bit;
  const bool zb = p.z & bit;
  if (zb && !xb) {
    p.sign = -p.sign;  // Z -> -Y
  }
  if (zb) {
    p.x ^= bit;  // Z gains X (-> Y), Y drops X (-> Z)
  }
}

// Conjugation by exp(+i pi/4 Z) on one qubit: X -> -Y, Y -> X, Z -> Z.
void conjugate_rz_pos(PauliString& p, int q) {
  const uint64_t bit = 1ull << q;
  const bool xb = p.x & bit;
  const bool zb = p.z & bit;
  if (xb && !zb) {
    p.sign = -p.sign;  // X -> -Y
  }
  if (xb) {
    p.z ^= bit;  // X gains Z (-> Y), Y drops Z (-> X)
  }
}

}  // namespace

std::vector<PauliString> transform_generators(const std::vector<PauliString>& gens,
                                              const Graph& base, const LcSequence& seq) {
  std::vector<PauliString> out = gens;
  Graph current = base;
  for (int a : seq.ops) {
    uint64_t nb = current.neighbors(a);  // throws VertexOutOfRange
    for (PauliString& p : out) {
      conjugate_rx_neg(p, a);
      uint64_t rest = nb;
      while (rest) {
        const int b = std::countr_zero(rest);
        rest &= rest - 1;
        conjugate_rz_pos(p, b);
      }
    }
    current = local_complement(current, a);
  }
  return out;
}

std::vector<Gate> measurement_basis(const PauliString& p) {
  std::vector<Gate> gates;
  for (int q = 0; q < p.n; ++q) {
    switch (p.letter(q)) {
      case 'X':
        gates.push_back({GateKind::H, q});
        break;
      case 'Y':
        gates.push_back({GateKind::Sdg, q});
        gates.push_back({GateKind::H, q});
        break;
      default:
        break;
    }
  }
  return gates;
}

double genuine_witness(const std::vector<double>& expectations, int n) {
  if (static_cast<int>(expectations.size()) != n) {
    throw WrongArity("genuine witness needs exactly n generator expectations");
  }
  double sum = 0.0;
  for (double e : expectations) {
    sum += e;
  }
  return static_cast<double>(n - 1) - sum;
}

double biseparable_witness(const Graph& g, int i, int j, double ei, double ej) {
  if (!g.has_edge(i, j)) {
    throw NotAnEdge("biseparable witness requires an edge of the prepared graph");
  }
  return 1.0 - ei - ej;
}

}  // namespace resbench
