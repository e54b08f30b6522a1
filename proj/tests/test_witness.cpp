#include <bit>
#include <cmath>
#include <set>

#include "doctest.h"
#include "resbench/builder.hpp"
#include "resbench/tableau.hpp"
#include "resbench/witness.hpp"
#include "support/oracles.hpp"

using namespace resbench;

namespace {

// Canonical GF(2) row-reduced span of the symplectic rows (x | z << 32);
// two generator lists span the same group iff the reduced sets match.
// Signs are checked separately against the state. Valid for n <= 32.
std::set<uint64_t> reduced_span(const std::vector<PauliString>& gens) {
  uint64_t pivot[64] = {0};
  for (const PauliString& g : gens) {
    uint64_t k = g.x | (g.z << 32);
    for (int bit = 63; bit >= 0; --bit) {
      if (!((k >> bit) & 1ull)) {
        continue;
      }
      if (pivot[bit] == 0) {
        pivot[bit] = k;
        break;
      }
      k ^= pivot[bit];
    }
  }
  // Back-substitute into reduced echelon form so the set is canonical.
  for (int bit = 0; bit < 64; ++bit) {
    if (pivot[bit] == 0) {
      continue;
    }
    for (int other = bit + 1; other < 64; ++other) {
      if (pivot[other] != 0 && ((pivot[other] >> bit) & 1ull)) {
        pivot[other] ^= pivot[bit];
      }
    }
  }
  std::set<uint64_t> out;
  for (uint64_t row : pivot) {
    if (row != 0) {
      out.insert(row);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("witness") {
  TEST_CASE("generators of a path") {
    const auto gens = generators(Graph::path(3));
    REQUIRE(gens.size() == 3);
    CHECK(gens[0].str() == "+XZI");
    CHECK(gens[1].str() == "+ZXZ");
    CHECK(gens[2].str() == "+IZX");
  }

  TEST_CASE("generators of a star and a lone vertex") {
    CHECK(generators(Graph::star(4))[0].str() == "+XZZZ");
    const auto lone = generators(Graph(1));
    REQUIRE(lone.size() == 1);
    CHECK(lone[0].str() == "+X");
  }

  TEST_CASE("stabilizer set appends the identity string") {
    const auto set3 = stabilizer_set(Graph::path(3));
    REQUIRE(set3.size() == 4);
    CHECK(set3.back().str() == "+III");
    CHECK(set3.back().weight() == 0);
    CHECK(stabilizer_set(Graph::path(5)).size() == 6);
  }

  TEST_CASE("empty sequence leaves generators unchanged") {
    const Graph g = Graph::path(4);
    CHECK(transform_generators(generators(g), g, LcSequence{}) == generators(g));
  }

  TEST_CASE("transformed generators stabilize the unitary-method state") {
    Rng rng(61);
    for (int n = 2; n <= 4; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        const Graph base = testing::random_connected_graph(n, rng);
        HardwareTopology t;
        t.name = "rand";
        t.n_qubits = n;
        t.couplers = base.edges();
        t.readout_err.assign(n, {0.0, 0.0});
        const auto seqs = sample_lc_sequences(n, 1, rng.next());
        std::vector<int> subset(n);
        for (int i = 0; i < n; ++i) {
          subset[i] = i;
        }
        const Circuit c = build_unitary_circuit(t, subset, seqs[0]);
        StabilizerState st(n);
        st.apply_unitaries(c);
        for (const PauliString& gen :
             transform_generators(generators(base), base, seqs[0])) {
          REQUIRE(st.expectation(gen) == 1);
        }
      }
    }
  }

  TEST_CASE("transformed group equals the target graph's generator group") {
    Rng rng(62);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + static_cast<int>(rng.uniform_int(4));
      const Graph base = testing::random_connected_graph(n, rng);
      const auto seqs = sample_lc_sequences(n, 1, rng.next());
      const Graph target = apply_lc_sequence(base, seqs[0]);
      const auto transformed = transform_generators(generators(base), base, seqs[0]);
      CHECK(reduced_span(transformed) == reduced_span(generators(target)));
    }
  }

  TEST_CASE("star-to-complete conjugation keeps the hub generator") {
    const Graph star = Graph::star(4);
    LcSequence seq;
    seq.ops = {0};
    const auto transformed = transform_generators(generators(star), star, seq);
    CHECK(transformed[0].str() == "+XZZZ");
    CHECK(transformed[1].str() == "+YYII");
  }

  TEST_CASE("measurement bases") {
    const auto rot_x = measurement_basis(PauliString::from_string("XZI"));
    REQUIRE(rot_x.size() == 1);
    CHECK(rot_x[0].kind == GateKind::H);
    CHECK(rot_x[0].q0 == 0);

    const auto rot_y = measurement_basis(PauliString::from_string("IY"));
    REQUIRE(rot_y.size() == 2);
    CHECK(rot_y[0].kind == GateKind::Sdg);
    CHECK(rot_y[0].q0 == 1);
    CHECK(rot_y[1].kind == GateKind::H);
    CHECK(rot_y[1].q0 == 1);

    CHECK(measurement_basis(PauliString::from_string("III")).empty());
  }

  TEST_CASE("genuine witness arithmetic") {
    CHECK(genuine_witness({1, 1, 1, 1}, 4) == doctest::Approx(-1.0));
    CHECK(genuine_witness({0.5, 0.5, 0.5, 0.5}, 4) == doctest::Approx(1.0));
    CHECK(genuine_witness({0.9, 0.8}, 2) == doctest::Approx(-0.7));
    CHECK_THROWS_AS(genuine_witness({1, 1}, 3), WrongArity);
  }

  TEST_CASE("witness sign flips exactly at p = 1/n") {
    for (int n = 2; n <= 6; ++n) {
      const double p = 1.0 / n;
      const std::vector<double> at(n, 1.0 - p);
      CHECK(genuine_witness(at, n) == doctest::Approx(0.0).epsilon(1e-12));
      const std::vector<double> below(n, 1.0 - (p - 1e-6));
      CHECK(genuine_witness(below, n) < 0.0);
      const std::vector<double> above(n, 1.0 - (p + 1e-6));
      CHECK(genuine_witness(above, n) > 0.0);
    }
  }

  TEST_CASE("witness is monotone in every expectation") {
    Rng rng(63);
    std::vector<double> e{0.4, 0.6, 0.1};
    const double before = genuine_witness(e, 3);
    e[1] += 0.05;
    CHECK(genuine_witness(e, 3) < before);
  }

  TEST_CASE("biseparable witness arithmetic and edge guard") {
    const Graph g = Graph::path(3);
    CHECK(biseparable_witness(g, 0, 1, 1.0, 1.0) == doctest::Approx(-1.0));
    CHECK(biseparable_witness(g, 1, 2, 0.5, 0.4) == doctest::Approx(0.1));
    CHECK_THROWS_AS(biseparable_witness(g, 0, 2, 1.0, 1.0), NotAnEdge);
  }

  TEST_CASE("for n=2 the biseparable and genuine witnesses coincide") {
    const Graph g = Graph::complete(2);
    const double ei = 0.87;
    const double ej = 0.79;
    CHECK(biseparable_witness(g, 0, 1, ei, ej) ==
          doctest::Approx(genuine_witness({ei, ej}, 2)));
  }
}
