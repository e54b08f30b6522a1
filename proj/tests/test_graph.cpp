#include <algorithm>
#include <set>

#include "doctest.h"
#include "resbench/graph.hpp"
#include "resbench/rng.hpp"
#include "support/oracles.hpp"

using namespace resbench;

TEST_SUITE("graph") {
  TEST_CASE("construction rejects self loops and bad vertices") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), ConfigError);
    CHECK_THROWS_AS(g.add_edge(0, 3), VertexOutOfRange);
    CHECK_THROWS_AS(Graph(65), TooLarge);
  }

  TEST_CASE("edges come out sorted and deduplicated") {
    Graph g(4);
    g.add_edge(2, 1);
    g.add_edge(1, 2);  // same edge again
    g.add_edge(3, 0);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
  }

  TEST_CASE("connectivity") {
    CHECK(Graph::path(5).connected());
    CHECK(Graph(1).connected());
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK_FALSE(g.connected());
  }

  TEST_CASE("local complement on a path toggles the one neighbor pair") {
    const Graph g = local_complement(Graph::path(4), 1);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  }

  TEST_CASE("local complement at a star center yields the complete graph") {
    for (int n : {3, 4, 5, 6}) {
      CHECK(local_complement(Graph::star(n), 0) == Graph::complete(n));
    }
  }

  TEST_CASE("local complement at a leaf changes nothing") {
    const Graph star = Graph::star(4);
    for (int leaf : {1, 2, 3}) {
      CHECK(local_complement(star, leaf) == star);
    }
  }

  TEST_CASE("local complement rejects out-of-range vertices") {
    CHECK_THROWS_AS(local_complement(Graph::path(3), 3), VertexOutOfRange);
  }

  TEST_CASE("local complement is an involution and preserves connectivity") {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + static_cast<int>(rng.uniform_int(6));
      const Graph g = testing::random_connected_graph(n, rng);
      const int v = static_cast<int>(rng.uniform_int(n));
      const Graph once = local_complement(g, v);
      CHECK(once.size() == g.size());
      CHECK(once.connected());
      CHECK(local_complement(once, v) == g);
    }
  }

  TEST_CASE("empty sequence is the identity") {
    const Graph g = Graph::path(4);
    CHECK(apply_lc_sequence(g, LcSequence{}) == g);
  }

  TEST_CASE("an unconsolidated [a,a] sequence cancels") {
    const Graph g = Graph::path(4);
    LcSequence raw;
    raw.ops = {1, 1};
    CHECK(apply_lc_sequence(g, raw) == g);
  }

  TEST_CASE("two-step sequence equals stepwise application") {
    const Graph g = Graph::path(4);
    LcSequence seq;
    seq.ops = {1, 2};
    CHECK(apply_lc_sequence(g, seq) == local_complement(local_complement(g, 1), 2));
  }

  TEST_CASE("consolidation collapses runs") {
    CHECK(LcSequence::consolidated({2, 2, 0}).ops == std::vector<int>{2, 0});
    CHECK(LcSequence::consolidated({1, 1, 1}).ops == std::vector<int>{1});
    CHECK(LcSequence::consolidated({0, 1, 1, 0}).ops == std::vector<int>{0, 1, 0});
    CHECK(LcSequence::consolidated({}).ops.empty());
  }

  TEST_CASE("sampled sequences obey the length and entry contracts") {
    const int n = 3;
    const auto seqs = sample_lc_sequences(n, 1 << (n + 1), 99);
    REQUIRE(seqs.size() == 16);
    for (const LcSequence& seq : seqs) {
      REQUIRE(seq.length() >= 1);
      REQUIRE(seq.length() <= 2 * static_cast<size_t>(n));
      for (size_t i = 0; i < seq.ops.size(); ++i) {
        REQUIRE(seq.ops[i] >= 0);
        REQUIRE(seq.ops[i] < n);
        if (i > 0) {
          REQUIRE(seq.ops[i] != seq.ops[i - 1]);  // consolidated
        }
      }
    }
  }

  TEST_CASE("sampling is deterministic per seed") {
    CHECK(sample_lc_sequences(4, 32, 5) == sample_lc_sequences(4, 32, 5));
    CHECK(sample_lc_sequences(4, 32, 5) != sample_lc_sequences(4, 32, 6));
  }

  TEST_CASE("raw lengths reach both ends of {1,..,2n}") {
    // With 512 draws over 6 possible lengths both extremes show up.
    const auto seqs = sample_lc_sequences(3, 512, 4);
    bool saw_len1 = false;
    bool saw_len6 = false;
    for (const LcSequence& seq : seqs) {
      saw_len1 |= seq.length() == 1;
      saw_len6 |= seq.length() == 6;  // emitted length 6 requires raw length 6
    }
    CHECK(saw_len1);
    CHECK(saw_len6);
  }

  TEST_CASE("orbit of K2 is just K2") {
    const OrbitResult orbit = enumerate_orbit(Graph::complete(2), 10);
    CHECK_FALSE(orbit.truncated);
    CHECK(orbit.graphs.size() == 1);
  }

  TEST_CASE("labeled star orbit holds every star centering plus the complete graph") {
    for (int n : {3, 4, 5}) {
      const OrbitResult orbit = enumerate_orbit(Graph::star(n), 1000);
      REQUIRE_FALSE(orbit.truncated);
      CHECK(orbit.graphs.size() == static_cast<size_t>(n) + 1);
      std::set<std::string> keys;
      for (const Graph& g : orbit.graphs) {
        keys.insert(g.key());
      }
      CHECK(keys.contains(Graph::complete(n).key()));
      for (int center = 0; center < n; ++center) {
        Graph star(n);
        for (int v = 0; v < n; ++v) {
          if (v != center) {
            star.add_edge(center, v);
          }
        }
        CHECK(keys.contains(star.key()));
      }
    }
  }

  TEST_CASE("path orbit closure matches the matrix-BFS oracle") {
    for (int n : {3, 4, 5}) {
      const Graph g = Graph::path(n);
      const OrbitResult orbit = enumerate_orbit(g, 100000);
      REQUIRE_FALSE(orbit.truncated);
      const std::set<std::string> expect = testing::orbit_keys_by_matrix_bfs(g);
      CHECK(orbit.graphs.size() == expect.size());
      auto edge_key = [&](const Graph& graph) {
        std::string key;
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            key += graph.has_edge(i, j) ? '1' : '0';
          }
        }
        return key;
      };
      for (const Graph& member : orbit.graphs) {
        CHECK(expect.contains(edge_key(member)));
      }
    }
  }

  TEST_CASE("orbit truncation signals instead of failing") {
    const OrbitResult orbit = enumerate_orbit(Graph::path(5), 3);
    CHECK(orbit.truncated);
    CHECK(orbit.graphs.size() == 3);
  }

  TEST_CASE("orbit membership is symmetric") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      const Graph g = testing::random_connected_graph(4, rng);
      const OrbitResult orbit = enumerate_orbit(g, 100000);
      REQUIRE_FALSE(orbit.truncated);
      const Graph& other = orbit.graphs[rng.uniform_int(orbit.graphs.size())];
      const OrbitResult back = enumerate_orbit(other, 100000);
      REQUIRE_FALSE(back.truncated);
      bool found = false;
      for (const Graph& member : back.graphs) {
        found |= member == g;
      }
      CHECK(found);
    }
  }
}
