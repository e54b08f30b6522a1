#include "resbench/graph.hpp"

#include <bit>
#include <queue>
#include <unordered_set>

#include "resbench/rng.hpp"

namespace resbench {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
  if (n < 1) {
    throw ConfigError("graph needs at least one vertex");
  }
  if (n > kMaxVertices) {
    throw TooLarge("graph vertex count exceeds " + std::to_string(kMaxVertices));
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [i, j] : edges) {
    g.add_edge(i, j);
  }
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) {
    g.add_edge(i, i + 1);
  }
  return g;
}

Graph Graph::star(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) {
    g.add_edge(0, i);
  }
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g.add_edge(i, j);
    }
  }
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n > 2) {
    g.add_edge(n - 1, 0);
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range for n=" +
                           std::to_string(n_));
  }
}

bool Graph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return i != j && (adj_[i] >> j) & 1ull;
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) {
    throw ConfigError("self loop rejected: " + std::to_string(i));
  }
  adj_[i] |= 1ull << j;
  adj_[j] |= 1ull << i;
}

void Graph::toggle_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) {
    throw ConfigError("self loop rejected: " + std::to_string(i));
  }
  adj_[i] ^= 1ull << j;
  adj_[j] ^= 1ull << i;
}

uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  return std::popcount(neighbors(v));
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) {
    total += std::popcount(adj_[v]);
  }
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    uint64_t higher = adj_[i] >> (i + 1) << (i + 1);
    while (higher) {
      int j = std::countr_zero(higher);
      out.emplace_back(i, j);
      higher &= higher - 1;
    }
  }
  return out;
}

bool Graph::connected() const {
  uint64_t seen = 1ull;
  uint64_t frontier = 1ull;
  while (frontier) {
    uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj_[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  uint64_t all = (n_ == 64) ? ~0ull : ((1ull << n_) - 1);
  return (seen & all) == all;
}

std::string Graph::key() const {
  std::string s = std::to_string(n_) + ":";
  for (auto [i, j] : edges()) {
    s += std::to_string(i) + "-" + std::to_string(j) + ",";
  }
  return s;
}

LcSequence LcSequence::consolidated(const std::vector<int>& raw) {
  LcSequence seq;
  for (int v : raw) {
    if (seq.ops.empty() || seq.ops.back() != v) {
      seq.ops.push_back(v);
    }
  }
  return seq;
}

Graph local_complement(const Graph& g, int v) {
  uint64_t nb = g.neighbors(v);  // throws VertexOutOfRange
  Graph out = g;
  uint64_t rest = nb;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    uint64_t partners = nb & rest;  // each unordered pair toggled once
    while (partners) {
      int j = std::countr_zero(partners);
      partners &= partners - 1;
      out.toggle_edge(i, j);
    }
  }
  return out;
}

Graph apply_lc_sequence(const Graph& g, const LcSequence& seq) {
  Graph out = g;
  for (int v : seq.ops) {
    out = local_complement(out, v);
  }
  return out;
}

std::vector<LcSequence> sample_lc_sequences(int n, int count, uint64_t seed) {
  if (n < 2) {
    throw ConfigError("sequence sampling needs n >= 2");
  }
  if (count < 1) {
    throw ConfigError("sequence count must be positive");
  }
  Rng rng(seed);
  std::vector<LcSequence> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    int raw_len = 1 + static_cast<int>(rng.uniform_int(2ull * n));
    std::vector<int> raw(raw_len);
    for (int& v : raw) {
      v = static_cast<int>(rng.uniform_int(n));
    }
    out.push_back(LcSequence::consolidated(raw));
  }
  return out;
}

OrbitResult enumerate_orbit(const Graph& g, int limit) {
  if (limit < 1) {
    throw ConfigError("orbit limit must be positive");
  }
  OrbitResult result;
  std::unordered_set<std::string> seen;
  result.graphs.push_back(g);
  seen.insert(g.key());
  for (size_t qi = 0; qi < result.graphs.size(); ++qi) {
    Graph current = result.graphs[qi];
    for (int v = 0; v < current.size(); ++v) {
      Graph next = local_complement(current, v);
      if (seen.contains(next.key())) {
        continue;
      }
      if (static_cast<int>(result.graphs.size()) >= limit) {
        result.truncated = true;
        return result;
      }
      seen.insert(next.key());
      result.graphs.push_back(std::move(next));
    }
  }
  return result;
}

}  // namespace resbench
