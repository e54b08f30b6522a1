#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "resbench/errors.hpp"

namespace resbench {

// Simple undirected graph over vertices 0..n-1. Adjacency is kept as one
// bitmask per vertex, so n is capped at 64 and a neighborhood is always a
// single word. No self loops, no parallel edges.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph path(int n);
  static Graph star(int n);  // center 0
  static Graph complete(int n);
  static Graph cycle(int n);

  int size() const { return n_; }
  bool has_edge(int i, int j) const;
  void add_edge(int i, int j);
  void toggle_edge(int i, int j);
  uint64_t neighbors(int v) const;
  int degree(int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // lexicographic (min, max)
  bool connected() const;

  // Canonical "n:0-1,1-2" form; usable as a dedup key for labeled graphs.
  std::string key() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<uint64_t> adj_;
};

// Ordered list of local-complementation vertices. Sampled sequences carry no
// two equal consecutive entries; the empty sequence is the identity.
struct LcSequence {
  std::vector<int> ops;

  // Collapse each run of equal consecutive entries to a single entry,
  // e.g. [2,2,0] -> [2,0].
  static LcSequence consolidated(const std::vector<int>& raw);

  bool empty() const { return ops.empty(); }
  size_t length() const { return ops.size(); }
  bool operator==(const LcSequence&) const = default;
};

// Toggle every edge between distinct neighbors of v; all else unchanged.
Graph local_complement(const Graph& g, int v);

// Fold local_complement over the sequence, left to right.
Graph apply_lc_sequence(const Graph& g, const LcSequence& seq);

// `count` sequences for an n-vertex graph: raw length uniform over {1,..,2n},
// entries uniform over vertices, consecutive duplicates consolidated.
// Deterministic for a fixed seed; sampling is with replacement.
std::vector<LcSequence> sample_lc_sequences(int n, int count, uint64_t seed);

struct OrbitResult {
  std::vector<Graph> graphs;  // BFS order, seed graph first
  bool truncated = false;     // limit hit before the closure completed
};

// Breadth-first closure of g under local complementation at every vertex,
// deduplicated by labeled edge set, truncated at `limit` graphs.
OrbitResult enumerate_orbit(const Graph& g, int limit);

}  // namespace resbench
