#include "resbench/treewidth.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace resbench {

namespace {

// Vertices outside S'+{v} adjacent to the component of v in the graph
// induced on S'+{v}; this is v's degree once S' has been eliminated.
int eliminated_degree(const std::vector<uint64_t>& adj, uint32_t sprime, int v) {
  uint32_t comp = 1u << v;
  uint32_t frontier = comp;
  uint32_t boundary = 0;
  while (frontier) {
    uint32_t reach = 0;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      reach |= static_cast<uint32_t>(adj[u]);
    }
    reach &= ~comp;
    frontier = reach & sprime;
    boundary |= reach & ~sprime;
    comp |= frontier;
  }
  return std::popcount(boundary);
}

}  // namespace

int treewidth(const Graph& g) {
  const int n = g.size();
  if (n > kTreewidthMaxVertices) {
    throw TooLarge("exact treewidth capped at n <= " +
                   std::to_string(kTreewidthMaxVertices));
  }
  std::vector<uint64_t> adj(n);
  for (int v = 0; v < n; ++v) {
    adj[v] = g.neighbors(v);
  }

  // best[S] = minimum over orderings that eliminate exactly S first of the
  // largest elimination degree seen so far; answer is best[full].
  const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<int8_t> best(static_cast<size_t>(full) + 1, -1);
  for (uint32_t s = 1; s <= full; ++s) {
    int value = n;  // upper bound: degrees never exceed n-1
    uint32_t rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      uint32_t sprime = s & ~(1u << v);
      int width = eliminated_degree(adj, sprime, v);
      if (best[sprime] > width) {
        width = best[sprime];
      }
      if (width < value) {
        value = width;
      }
    }
    best[s] = static_cast<int8_t>(value);
  }
  return best[full];
}

}  // namespace resbench
