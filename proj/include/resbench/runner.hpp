#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resbench/resultset.hpp"
#include "resbench/topology.hpp"

namespace resbench {

// Benchmark configuration. File schema (JSON): { "topology": path,
// "subsets": [[q,...],...], "method": "naive"|"unitary"|"both",
// "sequences_per_graph": int (0 = default 2^(n+1)), "shots": int,
// "seed": int, "mitigate": bool, "max_per_batch": int, "output": path }.
struct RunConfig {
  std::string topology_path;
  std::vector<std::vector<int>> subsets;
  std::string method = "both";
  int sequences_per_graph = 0;  // 0 -> 2^(n+1)
  long long shots = 4096;
  uint64_t seed = 0;
  bool mitigate = false;
  int max_per_batch = 300;
  std::string output;  // empty -> nothing written to disk

  static RunConfig load(const std::string& path);
  static RunConfig parse(const std::string& json_text);
  std::string to_json() const;
  void validate(const HardwareTopology& topo) const;
};

// First-fit packing of whole circuit groups into batches; a group is never
// split. Returns group indices per batch; throws GroupTooLarge when a single
// group exceeds the cap.
std::vector<std::vector<int>> plan_batches(const std::vector<int>& group_sizes,
                                           int max_per_batch);

// The full pipeline: induce each subset, sample LC sequences, build circuits
// per method, measure all n+1 stabilizers per graph state, mitigate per batch
// when enabled, and persist raw counts plus expectations. Writes
// <output>.jsonl and <output>.derived.json when an output path is set.
ResultSet run_benchmark(const RunConfig& cfg);
ResultSet run_benchmark(const RunConfig& cfg, const HardwareTopology& topo);

struct HeatmapCell {
  int width = 0;
  int treewidth = 0;
  double median_value = 0.0;
  int count = 0;
};

enum class WitnessKind { Genuine, Biseparable };

// Median witness per (width, treewidth) cell for one method. Biseparable
// cells aggregate every per-edge value of the graphs in the cell.
std::vector<HeatmapCell> median_heatmap(const ResultSet& rs, const std::string& method,
                                        WitnessKind kind, bool mitigated);

struct ResScore {
  int score = 0;          // max width x treewidth over negative-median cells
  int max_width = 0;      // largest width among negative cells
  int max_treewidth = 0;  // largest treewidth among negative cells
};

// A single cell must realize both factors of the product; 0 when no cell has
// a negative median.
ResScore res_score(const std::vector<HeatmapCell>& heatmap);

}  // namespace resbench
