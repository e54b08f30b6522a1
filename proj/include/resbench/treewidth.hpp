#pragma once

#include "resbench/graph.hpp"

namespace resbench {

inline constexpr int kTreewidthMaxVertices = 16;

// Exact treewidth via dynamic programming over vertex subsets (minimum over
// elimination orderings of the maximum back-degree). O(2^n * n^2); throws
// TooLarge above kTreewidthMaxVertices.
int treewidth(const Graph& g);

}  // namespace resbench
