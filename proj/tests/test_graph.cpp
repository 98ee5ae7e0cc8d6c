#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include <mtlab/canon.hpp>
#include <mtlab/contains.hpp>
#include <mtlab/enumerate.hpp>
#include <mtlab/graph6.hpp>

#include "oracles.hpp"

using namespace mtlab;

TEST_CASE("basic graph operations", "[graph]") {
  Graph g = cycle_graph(5);
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 5);
  CHECK(g.degree_sequence() == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(complement(g).edge_count() == 5);
  CHECK(is_connected(g));
  CHECK_FALSE(is_forest(g));
  CHECK(is_forest(path_graph(6)));
  CHECK(is_linear_forest(disjoint_union(path_graph(3), path_graph(2))));
  CHECK_FALSE(is_linear_forest(star_graph(3)));

  const Graph c = contract_edge(cycle_graph(6), 0, 1);
  CHECK(c.order() == 5);
  CHECK(c.edge_count() == 5);
  CHECK(c.max_degree() == 2);

  CHECK(k_core_vertices(disjoint_union(cycle_graph(4), path_graph(3)), 2) == low_mask(4));
  CHECK(components(disjoint_union(complete_graph(3), Graph(2))).size() == 3);
  CHECK_THROWS_AS(Graph(65), CapacityError);
  CHECK_NOTHROW(Graph(64));
}

TEST_CASE("graph6 matches a reference encoder and round trips", "[graph6]") {
  for (int n = 0; n <= 5; ++n)
    for (unsigned long c = 0; c < (1UL << oracle::pair_count(n)); ++c) {
      const Graph g = oracle::labeled(n, c);
      const auto s = encode_graph6(g);
      REQUIRE(s == oracle::graph6(g));
      REQUIRE(decode_graph6(s) == g);
    }
  std::mt19937 rng(7);
  for (int n : {7, 12, 30, 62, 63, 64}) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    CHECK(encode_graph6(g) == oracle::graph6(g));
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("graph6 known strings and errors", "[graph6]") {
  CHECK(encode_graph6(cycle_graph(5)) == "Dhc");
  CHECK(encode_graph6(complete_graph(4)) == "C~");
  CHECK(decode_graph6(">>graph6<<C~") == complete_graph(4));
  CHECK(decode_graph6("C~\n") == complete_graph(4));
  CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
  CHECK_THROWS_AS(decode_graph6("C~~"), Graph6Error);
  CHECK_THROWS_AS(decode_graph6("C "), Graph6Error);
  CHECK_THROWS_AS(decode_graph6("B@"), Graph6Error);  // nonzero padding
  CHECK_THROWS_AS(decode_graph6("~?A?"), CapacityError);
}

TEST_CASE("canonical forms agree with brute-force isomorphism", "[canon]") {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, std::string> canon_to_key;
    for (unsigned long c = 0; c < (1UL << oracle::pair_count(n)); c += (n == 6 ? 7 : 1)) {
      const Graph g = oracle::labeled(n, c);
      const auto cg = canonical_graph6(g);
      const auto key = oracle::permutation_key(g);
      auto [it, fresh] = canon_to_key.emplace(cg, key);
      REQUIRE(it->second == key);
    }
    // Distinct keys must give distinct canonical forms.
    std::set<std::string> keys;
    for (const auto& [cg, key] : canon_to_key) keys.insert(key);
    CHECK(keys.size() == canon_to_key.size());
  }
}

TEST_CASE("canonical form is invariant under relabeling", "[canon]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 13);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(canonical_graph6(g) == canonical_graph6(g.relabeled(perm)));
  }
  CHECK(is_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
  CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
}

TEST_CASE("enumeration matches brute-force class counts", "[enumerate]") {
  for (int n = 1; n <= 6; ++n) {
    const auto graphs = enumerate_graphs(n);
    const auto brute = oracle::classes_by_brute_force(n);
    std::set<std::string> seen;
    for (const auto& g : graphs) seen.insert(oracle::permutation_key(g));
    CHECK(seen.size() == graphs.size());
    CHECK(seen == brute);
  }
}

TEST_CASE("enumeration counts up to 8 vertices", "[enumerate]") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> canon;
    std::size_t count = 0;
    for_each_graph(n, [&](const Graph& g) {
      ++count;
      canon.insert(canonical_graph6(g));
    });
    CHECK(count == expected[n - 1]);
    CHECK(canon.size() == count);
  }
}

TEST_CASE("shard planning is independent of workers", "[enumerate]") {
  const auto s = plan_shards(130, 64);
  REQUIRE(s.size() == 3);
  CHECK(s[2].first == 128);
  CHECK(s[2].last == 130);
  CHECK_THROWS(plan_shards(5, 0));
}

TEST_CASE("containment matches brute-force embedding", "[contains]") {
  const std::vector<Graph> patterns{star_graph(3), cycle_graph(4), path_graph(4), complete_graph(3),
                                    disjoint_union(complete_graph(2), complete_graph(2))};
  for (const Graph& host : enumerate_graphs(6))
    for (const Graph& p : patterns) {
      REQUIRE(contains_induced(host, p) == oracle::embeds(host, p, true));
      REQUIRE(contains_subgraph(host, p) == oracle::embeds(host, p, false));
    }
}
