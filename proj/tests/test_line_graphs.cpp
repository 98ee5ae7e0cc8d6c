#include <catch_amalgamated.hpp>

#include <mtlab/canon.hpp>
#include <mtlab/classes.hpp>
#include <mtlab/enumerate.hpp>
#include <mtlab/graph6.hpp>
#include <mtlab/line_graphs.hpp>

#include "oracles.hpp"

using namespace mtlab;

namespace {

auto bowtie() -> Graph { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

auto forbidden_catalog() -> const LineForbiddenCatalog& {
  static const LineForbiddenCatalog c = search_line_forbidden(8);
  return c;
}

}  // namespace

TEST_CASE("line graph construction", "[line]") {
  CHECK(is_isomorphic(line_graph(complete_graph(3)), complete_graph(3)));
  CHECK(is_isomorphic(line_graph(star_graph(3)), complete_graph(3)));
  CHECK(is_isomorphic(line_graph(cycle_graph(6)), cycle_graph(6)));
  CHECK(is_isomorphic(line_graph(path_graph(5)), path_graph(4)));
  CHECK(line_graph(complete_graph(4)).edge_count() == 12);
  CHECK_THROWS_AS(line_graph(complete_graph(12)), CapacityError);
}

TEST_CASE("Krausz test recognises line graphs", "[line]") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n))
      if (g.edge_count() > 0) REQUIRE(is_line_graph_krausz(line_graph(g)));
  CHECK_FALSE(is_line_graph_krausz(star_graph(3)));
  Graph k5e = complete_graph(5);
  k5e.remove_edge(0, 1);
  CHECK_FALSE(is_line_graph_krausz(k5e));
}

TEST_CASE("membership test agrees with the subset oracle on the line graph", "[line]") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      if (g.edge_count() > 11) continue;
      REQUIRE(line_graph_is_mt(g) == oracle::is_k_mt(line_graph(g), 1));
    }
}

TEST_CASE("forbidden subgraph search", "[line][search]") {
  const auto& c = forbidden_catalog();
  CHECK(c.sporadic.size() == 15);
  CHECK(c.cycles.size() == 4);  // C5 .. C8
  for (const auto& s : c.sporadic) {
    const Graph g = decode_graph6(s);
    INFO(s);
    REQUIRE_FALSE(line_graph_is_mt(g));
    for (int v = 0; v < g.order(); ++v) REQUIRE(line_graph_is_mt(delete_vertex(g, v)));
    for (auto [u, v] : g.edges()) {
      Graph h = g;
      h.remove_edge(u, v);
      REQUIRE(line_graph_is_mt(h));
    }
  }
  // Six of the fifteen are pairs of small non-path graphs.
  int disconnected = 0;
  for (const auto& s : c.sporadic) disconnected += !is_connected(decode_graph6(s));
  CHECK(disconnected == 6);
  CHECK(std::count(c.sporadic.begin(), c.sporadic.end(), canonical_graph6(complete_bipartite(2, 3))) == 1);
}

TEST_CASE("construct and forbidden methods agree; structure is sound", "[line]") {
  const auto catalog = decode_catalog(forbidden_catalog().sporadic);
  const std::vector<int> structure_misses{0, 0, 0, 0, 0, 3, 9};
  for (int n = 1; n <= 7; ++n) {
    int misses = 0;
    for (const Graph& g : enumerate_graphs(n)) {
      const bool construct = mt_line_check(g, LineMethod::Construct);
      REQUIRE(mt_line_check(g, LineMethod::Forbidden, &catalog) == construct);
      const bool structure = mt_line_check(g, LineMethod::Structure);
      if (structure) REQUIRE(construct);
      misses += construct && !structure;
      // The template check works on the line graph itself and misses no more than the types do.
      const bool corollary = mt_line_corollary_check(line_graph(g));
      if (corollary) REQUIRE(construct);
      if (structure) REQUIRE(corollary);
    }
    INFO("n = " << n);
    CHECK(misses == structure_misses[n - 1]);
  }
  CHECK_THROWS_AS(mt_line_check(path_graph(3), LineMethod::Forbidden), std::invalid_argument);
}

TEST_CASE("root types", "[line]") {
  CHECK(root_type(path_graph(6)).kind == RootKind::LinearForest);
  CHECK(root_type(star_graph(5)).kind == RootKind::Type1);
  CHECK(root_type(complete_graph(3)).kind == RootKind::Type3);
  CHECK(root_type(cycle_graph(4)).kind == RootKind::Type4);
  CHECK(root_type(complete_graph(4)).kind == RootKind::Type7);
  CHECK(root_type(bowtie()).kind == RootKind::Type8);
  CHECK(root_type(cycle_graph(5)).kind == RootKind::NotInClass);
  // Leaf extensions are undone before matching.
  Graph ext = cycle_graph(4);
  ext.add_vertex(bit(ext.add_vertex(bit(0))));
  const auto rt = root_type(ext);
  CHECK(rt.kind == RootKind::Type4);
  CHECK(rt.extensions == 1);
  // A bowtie with a pendant at a non-centre vertex: MT line graph, no type.
  const Graph missed = decode_graph6("E@pw");
  CHECK(line_graph_is_mt(missed));
  CHECK(root_type(missed).kind == RootKind::NotInClass);
}

TEST_CASE("threshold line graphs from either side", "[line][threshold]") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const Graph l = line_graph(g);
      REQUIRE(threshold_line_checks(g, ThresholdSide::Root) == is_threshold(l));
      REQUIRE(threshold_line_checks(l, ThresholdSide::Line) == is_threshold(l));
    }
}
