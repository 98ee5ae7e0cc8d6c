#include <catch_amalgamated.hpp>

#include <mtlab/classes.hpp>
#include <mtlab/enumerate.hpp>
#include <mtlab/mock_threshold.hpp>

#include "oracles.hpp"

using namespace mtlab;

namespace {

auto has_induced(const Graph& g, const Graph& p) -> bool { return oracle::embeds(g, p, true); }

/// Induced cycle of length >= min_len, by brute-force embedding of each cycle.
auto brute_hole(const Graph& g, int min_len) -> bool {
  for (int len = min_len; len <= g.order(); ++len)
    if (has_induced(g, cycle_graph(len))) return true;
  return false;
}

auto two_k2() -> Graph { return disjoint_union(complete_graph(2), complete_graph(2)); }

auto brute_bipartite(const Graph& g) -> bool {
  const int n = g.order();
  for (unsigned long side = 0; side < (1UL << n); ++side) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && (((side >> u) & 1UL) != ((side >> v) & 1UL));
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("threshold: ordering, forbidden subgraphs and weights agree", "[classes][threshold]") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const bool by_order = is_threshold(g);
      const bool by_forbidden =
          !has_induced(g, two_k2()) && !has_induced(g, path_graph(4)) && !has_induced(g, cycle_graph(4));
      const auto w = threshold_weights(g);
      REQUIRE(by_order == by_forbidden);
      REQUIRE(w.has_value() == by_order);
      if (w) REQUIRE(verify_threshold_weights(g, *w));
    }
}

TEST_CASE("threshold weights reject wrong certificates", "[classes][threshold]") {
  const Graph p3 = path_graph(3);
  auto w = *threshold_weights(p3);
  CHECK(verify_threshold_weights(p3, w));
  CHECK_FALSE(verify_threshold_weights(complete_graph(3), w));
}

TEST_CASE("chordal, weakly chordal, split and bipartite against brute force", "[classes]") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const Graph h = complement(g);
      REQUIRE(is_chordal(g) == !brute_hole(g, 4));
      REQUIRE(is_weakly_chordal(g) == (!brute_hole(g, 5) && !brute_hole(h, 5)));
      REQUIRE(is_split(g) == is_split_brute(g));
      REQUIRE(is_split(g) == (is_chordal(g) && is_chordal(h)));
      REQUIRE(is_bipartite(g) == brute_bipartite(g));
      REQUIRE(is_claw_free(g) == !has_induced(g, star_graph(3)));
      REQUIRE(is_perfect_by_holes(g) == is_perfect_small(g));
    }
}

TEST_CASE("brute-force invariants agree with the reference oracles", "[classes]") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto inv = brute_invariants(g);
      REQUIRE(inv.omega == oracle::clique_number(g));
      REQUIRE(inv.alpha == oracle::clique_number(oracle::complement(g)));
      REQUIRE(inv.chi == oracle::chromatic_number(g));
    }
}

TEST_CASE("classify reports memberships", "[classes]") {
  const auto c = classify(complete_graph(3));
  CHECK(c.contains(ClassLabel::Threshold));
  CHECK(c.contains(ClassLabel::Chordal));
  CHECK(c.contains(ClassLabel::Even));
  CHECK(c.contains(ClassLabel::Eulerian));
  CHECK_FALSE(c.contains(ClassLabel::Bipartite));
  const auto d = classify(cycle_graph(4));
  CHECK(d.contains(ClassLabel::Bipartite));
  CHECK(d.contains(ClassLabel::WeaklyChordal));
  CHECK_FALSE(d.contains(ClassLabel::Chordal));
  CHECK_FALSE(d.contains(ClassLabel::Threshold));
  CHECK(label_name(ClassLabel::WeaklyChordal) == "weakly_chordal");
}

TEST_CASE("every MT graph is weakly chordal and perfect", "[classes][mt]") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_mock_threshold(g)) continue;
      REQUIRE(is_weakly_chordal(g));
      if (n <= 7) REQUIRE(is_perfect_small(g));
      REQUIRE(is_perfect_by_holes(g));
    }
}

TEST_CASE("bipartite MT structure matches recognition", "[classes][bipartite]") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_bipartite(g)) continue;
      const auto shape = classify_bipartite_mt(g);
      REQUIRE((shape.kind != BipartiteMTShape::Kind::NotBipartiteMT) == is_mock_threshold(g));
    }
  CHECK(classify_bipartite_mt(path_graph(5)).kind == BipartiteMTShape::Kind::Forest);
  const auto k25 = classify_bipartite_mt(complete_bipartite(2, 5));
  CHECK(k25.kind == BipartiteMTShape::Kind::K2sWithTrees);
  CHECK(k25.s == 5);
  CHECK(classify_bipartite_mt(disjoint_union(cycle_graph(4), cycle_graph(4))).kind ==
        BipartiteMTShape::Kind::NotBipartiteMT);
  CHECK_THROWS_AS(classify_bipartite_mt(complete_graph(3)), std::invalid_argument);
}

TEST_CASE("chordal MT graphs have a simplicial-partner ordering", "[classes][chordal]") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_chordal(g) || !is_mock_threshold(g)) continue;
      const auto w = chordal_mt_witness(g);
      REQUIRE(w.has_value());
      REQUIRE(verify_order(g, *w));
      // Each near-dominating vertex's earlier non-neighbour is simplicial in the prefix.
      Mask prefix = 0;
      for (std::size_t i = 0; i < w->order.size(); ++i) {
        const int v = w->order[i];
        if (w->classes[i] == VertexClass::NearDominating && i >= 1) {
          const Mask non = prefix & ~g.neighbors(v);
          REQUIRE(popcount(non) == 1);
          REQUIRE(is_simplicial(g, lowest_bit(non), prefix | bit(v)));
        }
        prefix |= bit(v);
      }
    }
  CHECK_THROWS_AS(chordal_mt_witness(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("claw-free threshold graphs", "[classes][threshold]") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const bool target = is_claw_free(g) && is_threshold(g);
      REQUIRE(clawfree_threshold_check(g) == target);
    }
}

TEST_CASE("even and Eulerian threshold graphs", "[classes][threshold]") {
  for (int n = 1; n <= 8; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_threshold(g)) continue;
      REQUIRE(even_threshold_check(g) == is_even(g));
      REQUIRE(eulerian_threshold_check(g) == is_eulerian(g));
    }
}

TEST_CASE("the run-length rule alone misjudges parity", "[classes][threshold]") {
  // K3: runs (D D) after the first vertex, all degrees even.  K4 - e: also a
  // run of two, but the two dominating vertices have degree 3.
  const Graph k3 = complete_graph(3);
  Graph k4e = complete_graph(4);
  k4e.remove_edge(0, 1);
  CHECK(is_even(k3));
  CHECK_FALSE(is_even(k4e));
  CHECK(even_threshold_runs_only(k3) == even_threshold_runs_only(k4e));
  CHECK(even_threshold_check(k3));
  CHECK_FALSE(even_threshold_check(k4e));
}
