#include <catch_amalgamated.hpp>

#include <random>

#include <mtlab/classes.hpp>
#include <mtlab/enumerate.hpp>
#include <mtlab/mock_threshold.hpp>

#include "oracles.hpp"

using namespace mtlab;

namespace {

auto two_triangles() -> Graph { return disjoint_union(complete_graph(3), complete_graph(3)); }

/// g plus extra vertices, at most `budget` of them, making every degree even while staying MT.
auto has_even_mt_extension(const Graph& g, int budget) -> bool {
  auto rec = [&](auto&& self, const Graph& h, int left) -> bool {
    bool even = true;
    for (int v = 0; v < h.order(); ++v) even = even && h.degree(v) % 2 == 0;
    if (even) return true;
    if (left == 0) return false;
    // A last vertex would have to be adjacent to exactly the odd vertices.
    Mask odd = 0;
    for (int v = 0; v < h.order(); ++v)
      if (h.degree(v) % 2) odd |= bit(v);
    {
      Graph last = h;
      last.add_vertex(odd);
      if (popcount(odd) % 2 == 0 && is_mock_threshold(last)) return true;
    }
    if (left == 1) return false;
    for (Mask nb = 0; nb < bit(h.order()); ++nb) {
      Graph next = h;
      next.add_vertex(nb);
      if (is_mock_threshold(next) && self(self, next, left - 1)) return true;
    }
    return false;
  };
  return rec(rec, g, budget);
}

}  // namespace

TEST_CASE("recognition agrees with the subset oracle", "[mt]") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n))
      for (int k : {1, 2}) {
        const auto r = recognize(g, k);
        REQUIRE(static_cast<bool>(r) == oracle::is_k_mt(g, k));
        if (r) REQUIRE(verify_order(g, *r.certificate));
      }
}

TEST_CASE("recognition examples", "[mt]") {
  const auto c5 = recognize(cycle_graph(5));
  REQUIRE_FALSE(c5);
  CHECK(c5.witness == cycle_graph(5));
  CHECK(recognize(complete_bipartite(2, 5)));
  CHECK(recognize(complete_graph(7)));
  CHECK(recognize(star_graph(6)));
  CHECK(recognize(path_graph(9)));
  CHECK_FALSE(recognize(two_triangles()));
  CHECK(recognize(two_triangles(), 2));
  CHECK_THROWS_AS(recognize(Graph(3), -1), std::invalid_argument);
}

TEST_CASE("forests are mock threshold", "[mt]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    Graph t(n);
    for (int v = 1; v < n; ++v)
      if (rng() % 5) t.add_edge(v, static_cast<int>(rng() % v));
    REQUIRE(recognize(t));
  }
}

TEST_CASE("verify_order edge cases", "[mt]") {
  CHECK(verify_order(Graph(1), MTOrder{{0}, {VertexClass::Dominating}, 1}));
  CHECK(verify_order(Graph(1), MTOrder{{0}, {VertexClass::Isolated}, 1}));
  CHECK_FALSE(verify_order(Graph(2), MTOrder{{0, 0}, {VertexClass::Dominating, VertexClass::Isolated}, 1}));
  std::vector<int> p{0, 1, 2, 3, 4};
  const Graph c5 = cycle_graph(5);
  do {
    REQUIRE_FALSE(make_certificate(c5, p).has_value());
  } while (std::next_permutation(p.begin(), p.end()));
  // Wrong tag on a valid order.
  auto cert = *recognize(complete_graph(3)).certificate;
  cert.classes.back() = VertexClass::Isolated;
  CHECK_FALSE(verify_order(complete_graph(3), cert));
}

TEST_CASE("stuck witness has 2 <= min degree <= max degree <= n-3", "[mt]") {
  for (int n = 5; n <= 8; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto r = recognize(g);
      if (r) continue;
      const Graph& w = r.witness;
      REQUIRE(w.min_degree() >= 2);
      REQUIRE(w.max_degree() <= w.order() - 3);
    }
}

TEST_CASE("randomized tie-breaks give the same verdict", "[mt]") {
  std::mt19937 rng(5);
  for (const Graph& g : enumerate_graphs(7))
    for (int rep = 0; rep < 3; ++rep) {
      const auto r = recognize_randomized(g, 1, rng);
      REQUIRE(static_cast<bool>(r) == is_mock_threshold(g));
      if (r) REQUIRE(verify_order(g, *r.certificate));
    }
}

TEST_CASE("closure under induced subgraphs, complements, contraction and 2-core", "[mt]") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto r = recognize(g);
      const Graph h = complement(g);
      REQUIRE(static_cast<bool>(recognize(h)) == static_cast<bool>(r));
      REQUIRE(static_cast<bool>(recognize(k_core(g, 2))) == static_cast<bool>(r));
      if (!r) continue;
      REQUIRE(make_certificate(h, r.certificate->order).has_value());
      for (Mask s = 0; s < g.vertices(); ++s) REQUIRE(is_mock_threshold(induced_subgraph(g, s)));
      for (auto [u, v] : g.edges()) REQUIRE(is_mock_threshold(contract_edge(g, u, v)));
    }
}

TEST_CASE("clique algorithm equals brute-force clique and chromatic numbers", "[mt]") {
  CHECK(clique_number(complete_graph(4), *recognize(complete_graph(4)).certificate) == 4);
  CHECK(clique_number(cycle_graph(4), *recognize(cycle_graph(4)).certificate) == 2);
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto r = recognize(g);
      if (!r) continue;
      const int w = clique_number(g, *r.certificate);
      REQUIRE(w == oracle::clique_number(g));
      REQUIRE(w == oracle::chromatic_number(g));
      REQUIRE(chromatic_number(g, *r.certificate) == w);
    }
  std::mt19937 rng(9);
  for (const Graph& g : enumerate_graphs(8)) {
    const auto r = recognize_randomized(g, 1, rng);
    if (r) REQUIRE(clique_number(g, *r.certificate) == oracle::clique_number(g));
  }
  MTOrder bad{{0, 1, 2}, {VertexClass::Isolated, VertexClass::Isolated, VertexClass::Isolated}, 1};
  CHECK_THROWS_AS(clique_number(complete_graph(3), bad), std::invalid_argument);
}

TEST_CASE("the literal back-scan undercounts on 3K2", "[mt]") {
  Graph g(6, {{0, 5}, {1, 4}, {2, 3}});
  const auto cert = *recognize(g).certificate;
  CHECK(clique_number_literal(g, cert) == 1);
  CHECK(clique_number(g, cert) == 2);
  int literal_misses = 0;
  for (const Graph& h : enumerate_graphs(7)) {
    const auto r = recognize(h);
    if (r && clique_number_literal(h, *r.certificate) != oracle::clique_number(h)) ++literal_misses;
  }
  CHECK(literal_misses == 39);
}

TEST_CASE("minimal non-MT graphs", "[mt]") {
  CHECK(is_minimal_non_mt(cycle_graph(5)));
  CHECK(is_minimal_non_mt(cycle_graph(6)));
  CHECK(is_minimal_non_mt(complement(cycle_graph(7))));
  CHECK_FALSE(is_minimal_non_mt(complete_graph(4)));
  CHECK(is_contraction_minimal_forb(cycle_graph(5)));
  CHECK_FALSE(is_contraction_minimal_forb(cycle_graph(6)));
  CHECK_THROWS_AS(is_contraction_minimal_forb(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("k-mock threshold nesting and examples", "[mt][k]") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n))
      for (int k = 0; k < 3; ++k)
        if (is_mock_threshold(g, k)) REQUIRE(is_mock_threshold(g, k + 1));
  CHECK(is_mock_threshold(two_triangles(), 2));
  CHECK_FALSE(is_mock_threshold(two_triangles(), 1));
  CHECK(is_mock_threshold(cycle_graph(6), 2));
  CHECK_FALSE(is_mock_threshold(cycle_graph(6), 1));
  for (int n : {5, 7, 9}) {
    CHECK(is_mock_threshold(cycle_graph(n), 2));
    CHECK(is_mock_threshold(complement(cycle_graph(n)), 2));
  }
  const auto cert = recognize(cycle_graph(7), 2).certificate;
  REQUIRE(cert);
  CHECK(verify_order(cycle_graph(7), *cert));
}

TEST_CASE("degree-sequence pair", "[mt]") {
  Graph g1 = cycle_graph(5);
  g1.add_edge(0, 2);
  g1 = disjoint_union(g1, complete_graph(2));
  Graph g2 = cycle_graph(5);
  g2.add_vertex(bit(0));
  g2.add_vertex(bit(1));
  auto sorted_desc = [](std::vector<int> d) {
    std::sort(d.rbegin(), d.rend());
    return d;
  };
  const std::vector<int> seq{3, 3, 2, 2, 2, 1, 1};
  CHECK(sorted_desc(g1.degree_sequence()) == seq);
  CHECK(sorted_desc(g2.degree_sequence()) == seq);
  CHECK(recognize(g1));
  CHECK_FALSE(recognize(g2));
}

TEST_CASE("max of clique and stable set is at least n/4", "[mt]") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_mock_threshold(g)) continue;
      const int best = std::max(oracle::clique_number(g), oracle::clique_number(oracle::complement(g)));
      REQUIRE(4 * best >= n);
    }
}

TEST_CASE("even embedding: what each variant actually does", "[mt][even]") {
  CHECK(even_embedding(complete_graph(3), EmbeddingVariant::Mutual) == complete_graph(3));

  const Graph k1k2 = disjoint_union(Graph(1), complete_graph(2));
  const Graph mutual = even_embedding(k1k2, EmbeddingVariant::Mutual);
  CHECK(mutual.order() == 5);
  CHECK(is_mock_threshold(mutual));
  CHECK_FALSE(is_even(mutual));

  const Graph independent = even_embedding(k1k2, EmbeddingVariant::Independent);
  CHECK(is_even(independent));
  CHECK(oracle::permutation_key(independent) == oracle::permutation_key(cycle_graph(5)));
  CHECK_FALSE(is_mock_threshold(independent));
}

TEST_CASE("mutual even embedding preserves MT", "[mt][even]") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n))
      if (is_mock_threshold(g)) REQUIRE(is_mock_threshold(even_embedding(g, EmbeddingVariant::Mutual)));
}

TEST_CASE("every small MT graph sits inside an even MT graph on at most 2n vertices", "[mt][even]") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n))
      if (is_mock_threshold(g)) REQUIRE(has_even_mt_extension(g, n));
}
