#include "resbench/runner.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "resbench/builder.hpp"
#include "resbench/mitigation.hpp"
#include "resbench/rng.hpp"
#include "resbench/stats.hpp"
#include "resbench/treewidth.hpp"
#include "resbench/witness.hpp"

namespace resbench {

namespace {

// Seed-derivation salts; fixed so every record is replayable by id.
constexpr uint64_t kSaltSequences = 1;
constexpr uint64_t kSaltShots = 2;
constexpr uint64_t kSaltCalibration = 3;

int method_id(const std::string& method) {
  return method == "naive" ? 0 : 1;
}

std::string iso_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open run config: " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

RunConfig RunConfig::parse(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("run config parse error: ") + e.what());
  }
  RunConfig cfg;
  try {
    cfg.topology_path = j.at("topology").get<std::string>();
    cfg.subsets = j.at("subsets").get<std::vector<std::vector<int>>>();
    cfg.method = j.value("method", std::string("both"));
    cfg.sequences_per_graph = j.value("sequences_per_graph", 0);
    cfg.shots = j.value("shots", 4096ll);
    cfg.seed = j.value("seed", 0ull);
    cfg.mitigate = j.value("mitigate", false);
    cfg.max_per_batch = j.value("max_per_batch", 300);
    cfg.output = j.value("output", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("run config malformed: ") + e.what());
  }
  return cfg;
}

std::string RunConfig::to_json() const {
  nlohmann::json j;
  j["topology"] = topology_path;
  j["subsets"] = subsets;
  j["method"] = method;
  j["sequences_per_graph"] = sequences_per_graph;
  j["shots"] = shots;
  j["seed"] = seed;
  j["mitigate"] = mitigate;
  j["max_per_batch"] = max_per_batch;
  j["output"] = output;
  return j.dump();
}

void RunConfig::validate(const HardwareTopology& topo) const {
  if (method != "naive" && method != "unitary" && method != "both") {
    throw ConfigError("method must be naive, unitary or both");
  }
  if (shots < 1) {
    throw ConfigError("shots must be positive");
  }
  if (sequences_per_graph < 0) {
    throw ConfigError("sequences_per_graph cannot be negative");
  }
  if (subsets.empty()) {
    throw ConfigError("at least one qubit subset is required");
  }
  for (const auto& subset : subsets) {
    if (subset.size() < 2) {
      throw ConfigError("subsets need at least two qubits");
    }
    if (static_cast<int>(subset.size()) > kTreewidthMaxVertices) {
      throw ConfigError("subset larger than the exact-treewidth cap");
    }
    induced_subgraph(topo, subset);  // throws on duplicates/range/connectivity
    if (max_per_batch < static_cast<int>(subset.size()) + 1) {
      throw ConfigError("max_per_batch is smaller than one circuit group");
    }
  }
}

std::vector<std::vector<int>> plan_batches(const std::vector<int>& group_sizes,
                                           int max_per_batch) {
  std::vector<std::vector<int>> batches;
  std::vector<int> loads;
  for (size_t gi = 0; gi < group_sizes.size(); ++gi) {
    const int size = group_sizes[gi];
    if (size > max_per_batch) {
      throw GroupTooLarge("group of " + std::to_string(size) +
                          " circuits exceeds batch cap " + std::to_string(max_per_batch));
    }
    bool placed = false;
    for (size_t b = 0; b < batches.size(); ++b) {
      if (loads[b] + size <= max_per_batch) {
        batches[b].push_back(static_cast<int>(gi));
        loads[b] += size;
        placed = true;
        break;
      }
    }
    if (!placed) {
      batches.push_back({static_cast<int>(gi)});
      loads.push_back(size);
    }
  }
  return batches;
}

ResultSet run_benchmark(const RunConfig& cfg) {
  return run_benchmark(cfg, HardwareTopology::load(cfg.topology_path));
}

ResultSet run_benchmark(const RunConfig& cfg, const HardwareTopology& topo) {
  topo.validate();
  cfg.validate(topo);
  const NoiseModel noise = NoiseModel::from_topology(topo);

  std::vector<std::string> methods;
  if (cfg.method == "both") {
    methods = {"naive", "unitary"};
  } else {
    methods = {cfg.method};
  }

  struct Group {
    int subset_index;
    std::vector<int> subset;
    std::string method;
    int seq_index;
    LcSequence seq;
    Circuit prep;
    Graph prepared;
    int prepared_treewidth;
    std::vector<PauliString> stabs;  // n generators then the identity string
    std::string build_error;
  };

  std::vector<Group> groups;
  for (size_t si = 0; si < cfg.subsets.size(); ++si) {
    const std::vector<int>& subset = cfg.subsets[si];
    auto [base, map] = induced_subgraph(topo, subset);
    const int n = base.size();
    const int count = cfg.sequences_per_graph > 0 ? cfg.sequences_per_graph : (1 << (n + 1));
    const std::vector<LcSequence> seqs =
        sample_lc_sequences(n, count, derive_seed(cfg.seed, {kSaltSequences, si}));
    for (const std::string& method : methods) {
      for (size_t li = 0; li < seqs.size(); ++li) {
        Group grp{static_cast<int>(si), subset, method, static_cast<int>(li),
                  seqs[li], Circuit{}, Graph(n), 0, {}, {}};
        try {
          grp.prepared = apply_lc_sequence(base, grp.seq);
          grp.prepared_treewidth = treewidth(grp.prepared);
          if (method == "naive") {
            grp.prep = build_naive_circuit(topo, subset, grp.seq);
            grp.stabs = stabilizer_set(grp.prepared);
          } else {
            grp.prep = build_unitary_circuit(topo, subset, grp.seq);
            grp.stabs = transform_generators(generators(base), base, grp.seq);
            grp.stabs.push_back(PauliString::identity(n));
          }
        } catch (const Error& e) {
          grp.build_error = e.what();
        }
        groups.push_back(std::move(grp));
      }
    }
  }

  std::vector<int> group_sizes;
  group_sizes.reserve(groups.size());
  for (const Group& g : groups) {
    group_sizes.push_back(static_cast<int>(g.subset.size()) + 1);
  }
  const std::vector<std::vector<int>> batches = plan_batches(group_sizes, cfg.max_per_batch);

  ResultSet rs;
  rs.info.created = iso_now();
  rs.info.topology_name = topo.name;
  rs.info.master_seed = cfg.seed;
  rs.info.config_json = cfg.to_json();
  rs.records.resize(0);

  // Records are emitted in group order regardless of batch layout; batch
  // membership only controls which calibration corrects a record.
  std::vector<std::vector<StabRecord>> per_group(groups.size());

  for (size_t bi = 0; bi < batches.size(); ++bi) {
    std::map<int, TensoredMitigator> mitigators;  // subset_index -> mitigator
    if (cfg.mitigate) {
      for (int gi : batches[bi]) {
        const Group& grp = groups[gi];
        if (!mitigators.contains(grp.subset_index)) {
          mitigators.emplace(
              grp.subset_index,
              calibrate(topo, grp.subset, cfg.shots,
                        derive_seed(cfg.seed, {kSaltCalibration, bi,
                                               static_cast<uint64_t>(grp.subset_index)})));
        }
      }
    }
    for (int gi : batches[bi]) {
      const Group& grp = groups[gi];
      const int n = static_cast<int>(grp.subset.size());
      for (int k = 0; k <= n; ++k) {
        StabRecord rec;
        rec.id = "s" + std::to_string(grp.subset_index) + "-" + grp.method + "-l" +
                 std::to_string(grp.seq_index) + "-g" + std::to_string(k);
        rec.subset_index = grp.subset_index;
        rec.subset = grp.subset;
        rec.method = grp.method;
        rec.seq_index = grp.seq_index;
        rec.lc_seq = grp.seq.ops;
        rec.width = n;
        rec.stab_index = k;
        rec.batch = static_cast<int>(bi);
        rec.seed = derive_seed(
            cfg.seed, {kSaltShots, static_cast<uint64_t>(grp.subset_index),
                       static_cast<uint64_t>(method_id(grp.method)),
                       static_cast<uint64_t>(grp.seq_index), static_cast<uint64_t>(k)});
        try {
          if (!grp.build_error.empty()) {
            throw Error(grp.build_error);
          }
          rec.graph_edges = grp.prepared.edges();
          rec.treewidth = grp.prepared_treewidth;
          rec.cnot_count = grp.prep.meta.cnot_count;
          const PauliString& stab = grp.stabs[k];
          rec.stabilizer = stab.str();
          rec.weight = stab.weight();
          const Circuit circ = with_stabilizer_measurement(grp.prep, stab);
          rec.counts = sample_shots(circ, noise, cfg.shots, rec.seed);
          const double sign = stab.sign < 0 ? -1.0 : 1.0;
          rec.raw_expectation =
              sign * expectation_from_quasi(normalize_counts(rec.counts), stab.support());
          if (cfg.mitigate) {
            const TensoredMitigator& m = mitigators.at(grp.subset_index);
            rec.mitigated_expectation =
                sign * expectation_from_quasi(mitigate_counts(m, rec.counts), stab.support());
          }
        } catch (const Error& e) {
          rec.error = e.what();
        }
        per_group[gi].push_back(std::move(rec));
      }
    }
  }

  for (auto& recs : per_group) {
    for (auto& rec : recs) {
      rs.records.push_back(std::move(rec));
    }
  }

  if (!cfg.output.empty()) {
    rs.save_jsonl(cfg.output + ".jsonl");
    std::ofstream derived(cfg.output + ".derived.json");
    if (!derived) {
      throw IoError("cannot write derived tables: " + cfg.output + ".derived.json");
    }
    derived << rs.derived_json() << "\n";
  }
  return rs;
}

std::vector<HeatmapCell> median_heatmap(const ResultSet& rs, const std::string& method,
                                        WitnessKind kind, bool mitigated) {
  std::map<std::pair<int, int>, std::vector<double>> cells;
  for (const WitnessRow& row : rs.witness_rows()) {
    if (row.method != method) {
      continue;
    }
    const auto key = std::make_pair(row.width, row.treewidth);
    if (kind == WitnessKind::Genuine) {
      if (mitigated) {
        if (row.genuine_mitigated) {
          cells[key].push_back(*row.genuine_mitigated);
        }
      } else {
        cells[key].push_back(row.genuine_raw);
      }
    } else {
      const auto* edges = mitigated
                              ? (row.biseparable_mitigated ? &*row.biseparable_mitigated : nullptr)
                              : &row.biseparable_raw;
      if (edges != nullptr) {
        for (const auto& [i, j, value] : *edges) {
          cells[key].push_back(value);
        }
      }
    }
  }
  std::vector<HeatmapCell> out;
  for (const auto& [key, values] : cells) {
    out.push_back({key.first, key.second, median(values), static_cast<int>(values.size())});
  }
  return out;
}

ResScore res_score(const std::vector<HeatmapCell>& heatmap) {
  ResScore score;
  for (const HeatmapCell& cell : heatmap) {
    if (cell.median_value < 0.0) {
      score.score = std::max(score.score, cell.width * cell.treewidth);
      score.max_width = std::max(score.max_width, cell.width);
      score.max_treewidth = std::max(score.max_treewidth, cell.treewidth);
    }
  }
  return score;
}

std::string ResultSet::derived_json() const {
  nlohmann::json j;
  j["schema"] = kResultSchemaVersion;

  auto& rows = j["witnesses"] = nlohmann::json::array();
  for (const WitnessRow& row : witness_rows()) {
    nlohmann::json r;
    r["subset_index"] = row.subset_index;
    r["method"] = row.method;
    r["seq_index"] = row.seq_index;
    r["width"] = row.width;
    r["treewidth"] = row.treewidth;
    r["genuine_raw"] = row.genuine_raw;
    r["genuine_mitigated"] =
        row.genuine_mitigated ? nlohmann::json(*row.genuine_mitigated) : nlohmann::json(nullptr);
    auto& bisep = r["biseparable_raw"] = nlohmann::json::array();
    for (const auto& [a, b, v] : row.biseparable_raw) {
      bisep.push_back({{"edge", {a, b}}, {"value", v}});
    }
    if (row.biseparable_mitigated) {
      auto& bm = r["biseparable_mitigated"] = nlohmann::json::array();
      for (const auto& [a, b, v] : *row.biseparable_mitigated) {
        bm.push_back({{"edge", {a, b}}, {"value", v}});
      }
    } else {
      r["biseparable_mitigated"] = nullptr;
    }
    rows.push_back(std::move(r));
  }

  auto heat_json = [&](const std::string& method, WitnessKind kind, bool mitigated) {
    nlohmann::json arr = nlohmann::json::array();
    for (const HeatmapCell& cell : median_heatmap(*this, method, kind, mitigated)) {
      arr.push_back({{"width", cell.width},
                     {"treewidth", cell.treewidth},
                     {"median", cell.median_value},
                     {"count", cell.count}});
    }
    return arr;
  };
  const bool mit = has_mitigated();
  for (const std::string method : {"naive", "unitary"}) {
    j["heatmaps"]["genuine_raw"][method] = heat_json(method, WitnessKind::Genuine, false);
    j["heatmaps"]["biseparable_raw"][method] = heat_json(method, WitnessKind::Biseparable, false);
    if (mit) {
      j["heatmaps"]["genuine_mitigated"][method] = heat_json(method, WitnessKind::Genuine, true);
      j["heatmaps"]["biseparable_mitigated"][method] =
          heat_json(method, WitnessKind::Biseparable, true);
    }
    const ResScore raw = res_score(median_heatmap(*this, method, WitnessKind::Genuine, false));
    j["res"][method]["raw"] = {{"score", raw.score},
                               {"max_width", raw.max_width},
                               {"max_treewidth", raw.max_treewidth}};
    if (mit) {
      const ResScore m = res_score(median_heatmap(*this, method, WitnessKind::Genuine, true));
      j["res"][method]["mitigated"] = {{"score", m.score},
                                       {"max_width", m.max_width},
                                       {"max_treewidth", m.max_treewidth}};
    } else {
      j["res"][method]["mitigated"] = nullptr;
    }
  }
  return j.dump(2);
}

}  // namespace resbench
