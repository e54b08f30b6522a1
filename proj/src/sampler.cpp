#include "resbench/sampler.hpp"

#include <bit>
#include <unordered_map>

#include "resbench/rng.hpp"
#include "resbench/tableau.hpp"

namespace resbench {

namespace {

// SWAPs are executed as three CNOTs so gate noise lands on each of them.
std::vector<Gate> expand_swaps(const Circuit& circ) {
  std::vector<Gate> out;
  out.reserve(circ.gates.size());
  for (const Gate& g : circ.gates) {
    if (g.kind == GateKind::SWAP) {
      out.push_back({GateKind::CNOT, g.q0, g.q1});
      out.push_back({GateKind::CNOT, g.q1, g.q0});
      out.push_back({GateKind::CNOT, g.q0, g.q1});
    } else {
      out.push_back(g);
    }
  }
  return out;
}

int hardware_qubit(const Circuit& circ, int wire) {
  if (wire < static_cast<int>(circ.meta.hardware_map.size())) {
    return circ.meta.hardware_map[wire];
  }
  return wire;
}

}  // namespace

Counts sample_shots(const Circuit& circ, const NoiseModel& noise, long long shots,
                    uint64_t seed) {
  if (shots < 1) {
    throw ConfigError("shots must be positive");
  }
  if (circ.width < 1 || circ.width > 64) {
    throw TooLarge("sampler handles 1..64 wires");
  }
  if (!circ.measures_all()) {
    throw ConfigError("circuit must measure every declared qubit exactly once");
  }
  const std::vector<Gate> gates = expand_swaps(circ);
  bool seen_measure = false;
  for (const Gate& g : gates) {
    if (g.kind == GateKind::Measure) {
      seen_measure = true;
    } else if (is_unitary(g.kind) && seen_measure) {
      throw ConfigError("sampler requires terminal measurements");
    }
  }

  // Reference sample: noiseless tableau run with outcome 0 at every random
  // measurement. Random-Z frame initialization recovers the full outcome
  // distribution around it.
  std::vector<int> ref(circ.width, 0);
  {
    StabilizerState state(circ.width);
    for (const Gate& g : gates) {
      if (is_unitary(g.kind)) {
        state.apply(g);
      } else if (g.kind == GateKind::Measure) {
        ref[g.cbit] = state.measure_z(g.q0, 0).outcome;
      }
    }
  }

  // Per-gate noise rates resolved once.
  std::vector<double> rate(gates.size(), 0.0);
  std::vector<std::pair<double, double>> readout(gates.size(), {0.0, 0.0});
  for (size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::CNOT) {
      rate[i] = noise.cnot_error(hardware_qubit(circ, g.q0), hardware_qubit(circ, g.q1));
    } else if (is_single_qubit(g.kind)) {
      rate[i] = noise.sq_error(hardware_qubit(circ, g.q0));
    } else if (g.kind == GateKind::Measure) {
      readout[i] = noise.readout_error(hardware_qubit(circ, g.q0));
    }
  }

  Rng rng(seed);
  const uint64_t width_mask =
      (circ.width == 64) ? ~0ull : ((1ull << circ.width) - 1);
  std::unordered_map<uint64_t, long long> packed;
  for (long long shot = 0; shot < shots; ++shot) {
    uint64_t fx = 0;
    uint64_t fz = rng.next() & width_mask;
    uint64_t outcome = 0;
    for (size_t i = 0; i < gates.size(); ++i) {
      const Gate& g = gates[i];
      const uint64_t b0 = 1ull << g.q0;
      switch (g.kind) {
        case GateKind::H: {
          const uint64_t xq = fx & b0;
          const uint64_t zq = fz & b0;
          fx = (fx & ~b0) | zq;
          fz = (fz & ~b0) | xq;
          break;
        }
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::RZp:
        case GateKind::RZm:
          fz ^= fx & b0;
          break;
        case GateKind::RXp:
        case GateKind::RXm:
          fx ^= fz & b0;
          break;
        case GateKind::CNOT: {
          const uint64_t b1 = 1ull << g.q1;
          if (fx & b0) fx ^= b1;
          if (fz & b1) fz ^= b0;
          break;
        }
        case GateKind::Barrier:
          break;
        case GateKind::Measure: {
          int bit = ref[g.cbit] ^ static_cast<int>((fx >> g.q0) & 1ull);
          auto [e0, e1] = readout[i];
          if (e0 > 0.0 || e1 > 0.0) {
            if (rng.uniform() < (bit ? e1 : e0)) {
              bit ^= 1;
            }
          }
          outcome |= static_cast<uint64_t>(bit) << g.cbit;
          break;
        }
        case GateKind::SWAP:
          break;  // expanded above
      }
      if (rate[i] > 0.0 && rng.bernoulli(rate[i])) {
        if (g.kind == GateKind::CNOT) {
          // One of the 15 non-identity two-qubit Paulis, uniformly.
          const uint64_t p = 1 + rng.uniform_int(15);
          const uint64_t b1 = 1ull << g.q1;
          if (p & 1) fx ^= b0;
          if (p & 2) fz ^= b0;
          if (p & 4) fx ^= b1;
          if (p & 8) fz ^= b1;
        } else {
          const uint64_t p = 1 + rng.uniform_int(3);  // X, Z or Y
          if (p & 1) fx ^= b0;
          if (p & 2) fz ^= b0;
        }
      }
    }
    packed[outcome] += 1;
  }

  Counts counts;
  for (const auto& [bits, count] : packed) {
    std::string key(circ.width, '0');
    for (int c = 0; c < circ.width; ++c) {
      if ((bits >> c) & 1ull) {
        key[c] = '1';
      }
    }
    counts[key] = count;
  }
  return counts;
}

QuasiDist normalize_counts(const Counts& counts) {
  if (counts.empty()) {
    throw EmptyCounts("empty counts");
  }
  long long total = 0;
  for (const auto& [k, v] : counts) {
    total += v;
  }
  if (total <= 0) {
    throw EmptyCounts("counts sum to zero");
  }
  QuasiDist dist;
  for (const auto& [k, v] : counts) {
    dist[k] = static_cast<double>(v) / static_cast<double>(total);
  }
  return dist;
}

double expectation_from_quasi(const QuasiDist& dist, uint64_t support) {
  if (dist.empty()) {
    throw EmptyCounts("empty distribution");
  }
  double total = 0.0;
  for (const auto& [key, weight] : dist) {
    int parity = 0;
    uint64_t rest = support;
    while (rest) {
      const int c = std::countr_zero(rest);
      rest &= rest - 1;
      if (c >= static_cast<int>(key.size())) {
        throw WidthMismatch("support bit beyond bitstring width");
      }
      parity ^= key[c] == '1';
    }
    total += parity ? -weight : weight;
  }
  return total;
}

double expectation_from_counts(const Counts& counts, uint64_t support) {
  return expectation_from_quasi(normalize_counts(counts), support);
}

}  // namespace resbench
