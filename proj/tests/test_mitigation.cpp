#include <cmath>

#include "doctest.h"
#include "resbench/builder.hpp"
#include "resbench/mitigation.hpp"
#include "resbench/witness.hpp"
#include "support/oracles.hpp"

using namespace resbench;

namespace {

HardwareTopology readout_only_topology(int n, double e0, double e1) {
  HardwareTopology t;
  t.name = "ro";
  t.n_qubits = n;
  for (int i = 0; i + 1 < n; ++i) {
    t.couplers.push_back({i, i + 1});
    t.cnot_err.push_back({i, i + 1, 0.0});
  }
  t.readout_err.assign(n, {e0, e1});
  return t;
}

}  // namespace

TEST_SUITE("mitigation") {
  TEST_CASE("calibration under zero noise returns the identity mitigator") {
    const HardwareTopology t = readout_only_topology(3, 0.0, 0.0);
    const TensoredMitigator m = calibrate(t, {0, 1, 2}, 2000, 5);
    for (auto [e0, e1] : m.rates()) {
      CHECK(e0 == doctest::Approx(0.0));
      CHECK(e1 == doctest::Approx(0.0));
    }
  }

  TEST_CASE("calibration recovers injected rates within 3 sigma") {
    const double e0 = 0.1;
    const double e1 = 0.05;
    const long long shots = 100000;
    const HardwareTopology t = readout_only_topology(2, e0, e1);
    const TensoredMitigator m = calibrate(t, {0, 1}, shots, 17);
    for (auto [est0, est1] : m.rates()) {
      CHECK(std::abs(est0 - e0) < 3 * std::sqrt(e0 * (1 - e0) / shots));
      CHECK(std::abs(est1 - e1) < 3 * std::sqrt(e1 * (1 - e1) / shots));
    }
  }

  TEST_CASE("singular assignment matrices are rejected") {
    CHECK_THROWS_AS(TensoredMitigator({{0.5, 0.5}}), SingularCalibration);
    CHECK_THROWS_AS(TensoredMitigator({{0.9, 0.1}}), SingularCalibration);
    CHECK_THROWS_AS(TensoredMitigator({{1.2, 0.0}}), ConfigError);
  }

  TEST_CASE("identity mitigator reproduces normalized counts bit for bit") {
    const Counts counts{{"00", 700}, {"01", 200}, {"11", 100}};
    const TensoredMitigator m = TensoredMitigator::identity(2);
    const QuasiDist out = mitigate_counts(m, counts);
    const QuasiDist expect = normalize_counts(counts);
    REQUIRE(out.size() == expect.size());
    for (const auto& [key, v] : expect) {
      REQUIRE(out.at(key) == v);  // exact float equality
    }
    // And the derived expectations match bit for bit.
    CHECK(expectation_from_quasi(out, 0b11) == expectation_from_quasi(expect, 0b11));
  }

  TEST_CASE("single-qubit inversion recovers the true state") {
    // A applied to |0> with e0=e1=0.1 gives P(1)=0.1; the inverse undoes it.
    const TensoredMitigator m({{0.1, 0.1}});
    const QuasiDist out = mitigate_counts(m, {{"0", 900}, {"1", 100}});
    CHECK(out.at("0") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(out.count("1") ? out.at("1") : 0.0) < 1e-12);
  }

  TEST_CASE("quasi-probability mass is conserved") {
    Rng rng(71);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + static_cast<int>(rng.uniform_int(4));
      std::vector<std::pair<double, double>> rates(n);
      for (auto& [e0, e1] : rates) {
        e0 = 0.15 * rng.uniform();
        e1 = 0.15 * rng.uniform();
      }
      const TensoredMitigator m(rates);
      Counts counts;
      const int keys = 1 + static_cast<int>(rng.uniform_int(1ull << n));
      for (int k = 0; k < keys; ++k) {
        std::string key(n, '0');
        for (int q = 0; q < n; ++q) {
          key[q] = rng.bernoulli(0.5) ? '1' : '0';
        }
        counts[key] += 1 + static_cast<long long>(rng.uniform_int(500));
      }
      double mass = 0.0;
      for (const auto& [key, v] : mitigate_counts(m, counts)) {
        mass += v;
      }
      CHECK(std::abs(mass - 1.0) < 1e-12);
    }
  }

  TEST_CASE("width mismatch is rejected") {
    const TensoredMitigator m = TensoredMitigator::identity(3);
    CHECK_THROWS_AS(mitigate_counts(m, {{"00", 10}}), WidthMismatch);
  }

  TEST_CASE("round trip: known rates pull ideal-state expectations back to one") {
    const double e0 = 0.08;
    const double e1 = 0.03;
    const long long shots = 8192;
    const HardwareTopology t = readout_only_topology(3, e0, e1);
    const NoiseModel noise = NoiseModel::from_topology(t);
    const Graph g = Graph::path(3);
    const TensoredMitigator exact_m(std::vector<std::pair<double, double>>(3, {e0, e1}));
    Rng rng(73);
    const double bound = 5.0 / std::sqrt(static_cast<double>(shots));
    for (const PauliString& gen : generators(g)) {
      const Circuit circ = with_stabilizer_measurement(build_graph_state_circuit(g), gen);
      const Counts counts = sample_shots(circ, noise, shots, rng.next());
      const double mitigated =
          expectation_from_quasi(mitigate_counts(exact_m, counts), gen.support());
      CHECK(std::abs(mitigated - 1.0) <= bound);
      // Raw expectation is visibly depressed by comparison.
      CHECK(expectation_from_counts(counts, gen.support()) < mitigated);
    }
  }

  TEST_CASE("clamp_expectation clips to [-1, 1]") {
    CHECK(clamp_expectation(1.03) == 1.0);
    CHECK(clamp_expectation(0.5) == 0.5);
    CHECK(clamp_expectation(-1.2) == -1.0);
    CHECK(clamp_expectation(-1.0) == -1.0);
  }

  TEST_CASE("serialization round-trips") {
    const TensoredMitigator m({{0.08, 0.03}, {0.02, 0.01}});
    const TensoredMitigator back = TensoredMitigator::from_json(m.to_json());
    CHECK(back.rates() == m.rates());
  }
}
