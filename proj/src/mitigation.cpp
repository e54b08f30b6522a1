#include "resbench/mitigation.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "resbench/builder.hpp"
#include "resbench/rng.hpp"

namespace resbench {

TensoredMitigator::TensoredMitigator(std::vector<std::pair<double, double>> rates)
    : rates_(std::move(rates)) {
  if (rates_.empty()) {
    throw ConfigError("mitigator needs at least one qubit");
  }
  for (auto [e0, e1] : rates_) {
    if (e0 < 0.0 || e0 > 1.0 || e1 < 0.0 || e1 > 1.0) {
      throw ConfigError("assignment rates outside [0, 1]");
    }
    if (std::abs(1.0 - e0 - e1) < 1e-9) {
      throw SingularCalibration("assignment matrix is singular (e0 + e1 = 1)");
    }
  }
}

TensoredMitigator TensoredMitigator::identity(int n) {
  return TensoredMitigator(std::vector<std::pair<double, double>>(n, {0.0, 0.0}));
}

std::string TensoredMitigator::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (auto [e0, e1] : rates_) {
    j.push_back({e0, e1});
  }
  return j.dump();
}

TensoredMitigator TensoredMitigator::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("mitigator JSON parse error: ") + e.what());
  }
  std::vector<std::pair<double, double>> rates;
  for (const auto& r : j) {
    rates.emplace_back(r.at(0).get<double>(), r.at(1).get<double>());
  }
  return TensoredMitigator(rates);
}

QuasiDist mitigate_quasi(const TensoredMitigator& m, const QuasiDist& dist) {
  if (dist.empty()) {
    throw EmptyCounts("empty distribution");
  }
  const int n = m.qubit_count();
  for (const auto& [key, v] : dist) {
    if (static_cast<int>(key.size()) != n) {
      throw WidthMismatch("bitstring width does not match mitigator arity");
    }
  }
  QuasiDist cur = dist;
  for (int q = 0; q < n; ++q) {
    auto [e0, e1] = m.rates()[q];
    const double det = 1.0 - e0 - e1;
    // inv(A) = 1/det * [[1-e1, -e1], [-e0, 1-e0]]
    const double i00 = (1.0 - e1) / det;
    const double i01 = -e1 / det;
    const double i10 = -e0 / det;
    const double i11 = (1.0 - e0) / det;
    QuasiDist next;
    for (const auto& [key, v] : cur) {
      std::string low_key = key;
      low_key[q] = '0';
      if (key[q] == '1' && cur.contains(low_key)) {
        continue;  // pair already handled from the '0' side
      }
      std::string high_key = key;
      high_key[q] = '1';
      const auto it_low = cur.find(low_key);
      const auto it_high = cur.find(high_key);
      const double p0 = it_low == cur.end() ? 0.0 : it_low->second;
      const double p1 = it_high == cur.end() ? 0.0 : it_high->second;
      const double n0 = i00 * p0 + i01 * p1;
      const double n1 = i10 * p0 + i11 * p1;
      if (n0 != 0.0) next[low_key] = n0;
      if (n1 != 0.0) next[high_key] = n1;
    }
    cur = std::move(next);
  }
  return cur;
}

QuasiDist mitigate_counts(const TensoredMitigator& m, const Counts& counts) {
  return mitigate_quasi(m, normalize_counts(counts));
}

TensoredMitigator calibrate(const HardwareTopology& topo, const std::vector<int>& qubits,
                            long long shots, uint64_t seed) {
  if (shots < 1) {
    throw ConfigError("calibration needs at least one shot");
  }
  const int n = static_cast<int>(qubits.size());
  const NoiseModel noise = NoiseModel::from_topology(topo);

  auto make = [&](bool ones) {
    Circuit c;
    c.width = n;
    c.meta.hardware_map = qubits;
    if (ones) {
      for (int q = 0; q < n; ++q) {
        // exp(-i pi/4 X) twice = X up to global phase.
        c.rx_neg(q);
        c.rx_neg(q);
      }
    }
    for (int q = 0; q < n; ++q) {
      c.measure(q, q);
    }
    return c;
  };

  const Counts zeros = sample_shots(make(false), noise, shots, derive_seed(seed, {0}));
  const Counts ones = sample_shots(make(true), noise, shots, derive_seed(seed, {1}));

  auto marginal_one = [&](const Counts& counts, int q) {
    long long hits = 0;
    long long total = 0;
    for (const auto& [key, c] : counts) {
      total += c;
      if (key[q] == '1') {
        hits += c;
      }
    }
    return static_cast<double>(hits) / static_cast<double>(total);
  };

  std::vector<std::pair<double, double>> rates(n);
  for (int q = 0; q < n; ++q) {
    rates[q] = {marginal_one(zeros, q), 1.0 - marginal_one(ones, q)};
  }
  return TensoredMitigator(rates);
}

double clamp_expectation(double x) {
  return std::clamp(x, -1.0, 1.0);
}

}  // namespace resbench
