#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "resbench/sampler.hpp"

namespace resbench {

inline constexpr int kResultSchemaVersion = 1;

// One stabilizer measurement: the prepared graph, the measured string with
// its sign orientation, the raw counts and both expectation values. Every
// record is replayable from (master seed, record id).
struct StabRecord {
  std::string id;
  int subset_index = 0;
  std::vector<int> subset;  // hardware qubits, local order
  std::string method;       // "naive" | "unitary"
  int seq_index = 0;
  std::vector<int> lc_seq;
  std::vector<std::pair<int, int>> graph_edges;  // prepared graph
  int width = 0;
  int treewidth = 0;
  int cnot_count = 0;
  int stab_index = 0;       // 0..n-1 generators, n = identity string
  std::string stabilizer;   // signed letters, e.g. "+XZI"
  int weight = 0;
  Counts counts;
  double raw_expectation = 0.0;
  std::optional<double> mitigated_expectation;  // unclamped
  uint64_t seed = 0;
  int batch = -1;
  std::string error;  // empty for a good record

  bool ok() const { return error.empty(); }
  bool is_identity_record() const { return stab_index == width; }
};

struct RunInfo {
  std::string created;  // ISO-8601 UTC; the only field excluded from determinism
  std::string topology_name;
  uint64_t master_seed = 0;
  std::string config_json;  // resolved configuration echo
};

// Per-graph witness values derived from one group of records.
struct WitnessRow {
  int subset_index = 0;
  std::string method;
  int seq_index = 0;
  int width = 0;
  int treewidth = 0;
  double genuine_raw = 0.0;
  std::optional<double> genuine_mitigated;
  std::vector<std::tuple<int, int, double>> biseparable_raw;  // (i, j, value)
  std::optional<std::vector<std::tuple<int, int, double>>> biseparable_mitigated;
};

class ResultSet {
 public:
  RunInfo info;
  std::vector<StabRecord> records;

  bool has_mitigated() const;

  // Witness values per (subset, method, sequence); groups with any failed
  // generator record are skipped so errors never poison aggregates.
  // Mitigated expectations are clamped to [-1, 1] before entering a witness.
  std::vector<WitnessRow> witness_rows() const;

  void save_jsonl(const std::string& path) const;
  static ResultSet load_jsonl(const std::string& path);

  // Derived tables (witness rows, heatmap cells, scores) as a JSON document.
  std::string derived_json() const;
};

}  // namespace resbench
