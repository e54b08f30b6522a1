#pragma once

#include <string>
#include <vector>

#include "resbench/resultset.hpp"
#include "resbench/runner.hpp"
#include "resbench/stats.hpp"

namespace resbench {

// Pairwise Pearson table over the record features
// {width, cnot_count, weight, treewidth, expectation}. Identity-string
// records are excluded (their weight and expectation are degenerate).
struct CorrelationMatrix {
  std::vector<std::string> features;
  std::vector<std::vector<PearsonResult>> cells;  // full symmetric matrix
  long long dof = 0;
};

CorrelationMatrix correlation_matrix(const ResultSet& rs);

enum class ExportKind {
  HeatmapCsv,
  ScoresJson,
  QuartilesCsv,
  CorrCsv,
  HeatmapSvg,
  HistogramSvg,
};

// Names as accepted by the CLI: heatmap-csv, scores-json, quartiles-csv,
// corr-csv, heatmap-svg, histogram-svg.
ExportKind parse_export_kind(const std::string& name);

// Write the artifact(s) for `what` into out_dir; returns the file paths.
// Output bytes are a pure function of the result set.
std::vector<std::string> export_artifact(const ResultSet& rs, ExportKind what,
                                         const std::string& out_dir);

}  // namespace resbench
