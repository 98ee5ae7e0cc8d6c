#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "census.hpp"
#include "classes.hpp"
#include "contains.hpp"
#include "graph.hpp"
#include "mock_threshold.hpp"

namespace mtlab {

/// Vertices are the edges of g in (i, j) order with i < j; adjacent iff the edges share an endpoint.
inline auto line_graph(const Graph& g) -> Graph {
  const auto e = g.edges();
  if (e.size() > static_cast<std::size_t>(Graph::kCapacity)) throw CapacityError("line graph: more than 64 edges");
  Graph l(static_cast<int>(e.size()));
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (e[a].first == e[b].first || e[a].first == e[b].second || e[a].second == e[b].first ||
          e[a].second == e[b].second)
        l.add_edge(static_cast<int>(a), static_cast<int>(b));
  return l;
}

enum class RootKind { LinearForest, Type1, Type2, Type3, Type4, Type5, Type6, Type7, Type8, NotInClass };

inline auto root_kind_name(RootKind k) -> std::string {
  static const char* names[] = {"linear_forest", "type1", "type2", "type3", "type4",
                                "type5",         "type6", "type7", "type8", "not_in_class"};
  return names[static_cast<int>(k)];
}

struct RootType {
  RootKind kind = RootKind::NotInClass;
  int core_order = 0;         ///< vertices of the reduced component's core shape
  std::vector<int> pendants;  ///< pendant edges per core vertex after reduction, descending
  int extensions = 0;         ///< leaf-extension steps undone by the reduction

  explicit operator bool() const noexcept { return kind != RootKind::NotInClass; }
};

namespace detail {

// Repeatedly deletes a leaf whose neighbour has degree 2; returns surviving vertices.
inline auto reduce_leaf_extensions(const Graph& g, Mask alive, int& steps) -> Mask {
  for (bool changed = true; changed;) {
    changed = false;
    for (Mask r = alive; r; r &= r - 1) {
      const int v = lowest_bit(r);
      if (g.degree_in(v, alive) != 1) continue;
      const int u = lowest_bit(g.neighbors(v) & alive);
      if (g.degree_in(u, alive) != 2) continue;
      alive &= ~bit(v);
      ++steps;
      changed = true;
      break;
    }
  }
  return alive;
}

// Index of the only component that is not a path, -1 if none, -2 if several.
inline auto single_non_path_component(const Graph& g, Mask& comp) -> int {
  int found = -1;
  for (Mask c : components(g)) {
    if (is_linear_forest(induced_subgraph(g, c))) continue;
    if (found != -1) return -2;
    found = 0;
    comp = c;
  }
  return found;
}

inline auto root_type_of(const Graph& g) -> RootType {
  RootType out;
  Mask comp = 0;
  const int which = single_non_path_component(g, comp);
  if (which == -1) {
    out.kind = RootKind::LinearForest;
    return out;
  }
  if (which == -2) return out;

  const Mask r = reduce_leaf_extensions(g, comp, out.extensions);
  const Graph h = induced_subgraph(g, r);
  const Mask core = k_core_vertices(h, 2);
  const int n = h.order();

  if (!core) {
    // Tree: one branch vertex (star) or two adjacent ones, one of degree 3.
    std::vector<int> branch;
    for (int v = 0; v < n; ++v)
      if (h.degree(v) >= 3) branch.push_back(v);
    for (int v = 0; v < n; ++v)
      if (h.degree(v) < 3 && h.degree(v) != 1) return out;
    if (branch.size() == 1) {
      out.kind = RootKind::Type1;
      out.pendants = {h.degree(branch[0])};
    } else if (branch.size() == 2 && h.adjacent(branch[0], branch[1]) &&
               (h.degree(branch[0]) == 3 || h.degree(branch[1]) == 3)) {
      out.kind = RootKind::Type2;
      out.pendants = {h.degree(branch[0]) - 1, h.degree(branch[1]) - 1};
      std::sort(out.pendants.rbegin(), out.pendants.rend());
    }
    return out;
  }

  // Everything outside the core must be a leaf on the core.
  for (Mask rest = h.vertices() & ~core; rest; rest &= rest - 1) {
    const int v = lowest_bit(rest);
    if (h.degree(v) != 1 || !(h.neighbors(v) & core)) return out;
  }
  const Graph c = induced_subgraph(h, core);
  std::vector<int> cv;
  for_each_bit(core, [&](int v) { cv.push_back(v); });
  const int m = c.order();
  std::vector<int> pend(m);
  for (int i = 0; i < m; ++i) pend[i] = h.degree(cv[i]) - c.degree(i);
  out.core_order = m;
  out.pendants = pend;
  std::sort(out.pendants.rbegin(), out.pendants.rend());
  const int e = c.edge_count();
  auto with_pendants = [&]() {
    std::vector<int> s;
    for (int i = 0; i < m; ++i)
      if (pend[i] > 0) s.push_back(i);
    return s;
  };
  const auto at = with_pendants();

  if (m == 3 && e == 3) {
    const auto& p = out.pendants;
    if (p[1] <= 1 && p[2] == 0) out.kind = RootKind::Type3;
  } else if (m == 4 && e == 4 && c.max_degree() == 2) {
    if (at.size() <= 1 || (at.size() == 2 && c.adjacent(at[0], at[1]) && std::min(pend[at[0]], pend[at[1]]) <= 1))
      out.kind = RootKind::Type4;
  } else if (m == 4 && e == 5) {
    std::vector<int> tri, di;
    for (int i = 0; i < m; ++i) (c.degree(i) == 3 ? tri : di).push_back(i);
    int on_tri = 0, on_di = 0, di_with = 0, max_di = 0;
    for (int i : tri) on_tri += pend[i] > 0;
    for (int i : di) {
      on_di += pend[i];
      di_with += pend[i] > 0;
      max_di = std::max(max_di, pend[i]);
    }
    if (on_tri <= 1 && on_di <= 1) out.kind = RootKind::Type5;
    else if (on_tri == 0 && di_with == 1 && max_di == 2) out.kind = RootKind::Type6;
  } else if (m == 4 && e == 6) {
    if (at.size() <= 1 && out.pendants[0] <= 2) out.kind = RootKind::Type7;
  } else if (m == 5 && e == 6 && c.max_degree() == 4) {
    bool ok = true;
    for (int i : at) ok = ok && c.degree(i) == 4;
    if (ok) out.kind = RootKind::Type8;
  }
  return out;
}

}  // namespace detail

enum class LineMethod { Construct, Forbidden, Structure };

/// Graphs whose line graph is mock threshold are closed under subgraphs; this is the membership test.
inline auto line_graph_is_mt(const Graph& g) -> bool {
  if (g.edge_count() > Graph::kCapacity) return false;
  return is_mock_threshold(line_graph(g));
}

/// Structural decomposition of a root graph; kind NotInClass when no type matches.
inline auto root_type(const Graph& g) -> RootType { return detail::root_type_of(g); }

/**
 * Whether L(g) is mock threshold, by one of three routes: build L(g) and
 * recognise it; look for a long cycle or a catalog member as a (not
 * necessarily induced) subgraph; or match the structural types.
 */
inline auto mt_line_check(const Graph& g, LineMethod method, const std::vector<Graph>* catalog = nullptr) -> bool {
  switch (method) {
    case LineMethod::Construct:
      return line_graph_is_mt(g);
    case LineMethod::Forbidden: {
      if (!catalog) throw std::invalid_argument("mt_line_check: forbidden method needs the catalog");
      for (int len = 5; len <= g.order(); ++len)
        if (contains_subgraph(g, cycle_graph(len))) return false;
      for (const Graph& f : *catalog)
        if (contains_subgraph(g, f)) return false;
      return true;
    }
    case LineMethod::Structure:
      return static_cast<bool>(root_type(g));
  }
  return false;
}

struct LineForbiddenCatalog {
  std::vector<std::string> sporadic;  ///< canonical graph6, sorted by (order, encoding)
  std::vector<std::string> cycles;    ///< C_5 .. C_maxN as found by the search
};

/**
 * Minimal graphs (under taking subgraphs) whose line graph is not mock
 * threshold, up to max_n vertices.  Minimality is checked on single vertex
 * and single edge deletions.  All graphs are searched, not only connected ones.
 */
inline auto search_line_forbidden(int max_n, int workers = 1) -> LineForbiddenCatalog {
  CensusOptions opt;
  opt.max_n = max_n;
  opt.workers = workers;
  auto edge_minimal = [](const Graph& g) {
    for (auto [u, v] : g.edges()) {
      Graph h = g;
      h.remove_edge(u, v);
      if (!line_graph_is_mt(h)) return false;
    }
    return true;
  };
  const auto found = run_hereditary_search(opt, "line-mt", line_graph_is_mt, edge_minimal);
  LineForbiddenCatalog out;
  for (const auto& s : found.minimal) (is_cycle(decode_graph6(s)) ? out.cycles : out.sporadic).push_back(s);
  return out;
}

inline auto decode_catalog(const std::vector<std::string>& lines) -> std::vector<Graph> {
  std::vector<Graph> out;
  for (const auto& s : lines) out.push_back(decode_graph6(s));
  return out;
}

// ---------------------------------------------------------------------------
// Threshold line graphs

/// Krausz test: edges split into cliques with every vertex in at most two of them.
inline auto is_line_graph_krausz(const Graph& g) -> bool {
  const int n = g.order();
  std::vector<int> uses(n, 0);
  std::vector<Mask> covered(n, 0);  // covered[u] = neighbours v with uv already in a clique

  auto first_uncovered = [&](int& u, int& v) {
    for (u = 0; u < n; ++u) {
      const Mask left = g.neighbors(u) & ~covered[u] & ~low_mask(u + 1);
      if (left) {
        v = lowest_bit(left);
        return true;
      }
    }
    return false;
  };

  auto solve = [&](auto&& self) -> bool {
    int u = 0, v = 0;
    if (!first_uncovered(u, v)) return true;
    if (uses[u] >= 2 || uses[v] >= 2) return false;
    // Grow cliques containing u and v using only uncovered edges.
    const Mask pool = g.neighbors(u) & g.neighbors(v);
    std::vector<Mask> options;
    auto grow = [&](auto&& rec, Mask clique, Mask cand) -> void {
      options.push_back(clique);
      for (Mask c = cand; c; c &= c - 1) {
        const int w = lowest_bit(c);
        if (uses[w] >= 2) continue;
        bool fresh = true;
        for_each_bit(clique, [&](int x) { fresh = fresh && !(covered[x] & bit(w)); });
        if (!fresh) continue;
        rec(rec, clique | bit(w), cand & g.neighbors(w) & ~low_mask(w + 1));
      }
    };
    grow(grow, bit(u) | bit(v), pool);
    for (Mask clique : options) {
      for_each_bit(clique, [&](int x) {
        ++uses[x];
        covered[x] |= clique & ~bit(x);
      });
      if (self(self)) return true;
      for_each_bit(clique, [&](int x) {
        --uses[x];
        covered[x] &= ~(clique & ~bit(x));
      });
    }
    return false;
  };
  return solve(solve);
}

enum class ThresholdSide { Root, Line };

/**
 * Root side: every component of g is K1 or K2 except at most one, which has a
 * vertex whose deletion leaves at most one edge (a star with an optional
 * extra edge).  Line side: after dropping isolated vertices, g is empty,
 * complete, or has a vertex of degree 1 or 2 whose deletion leaves a clique.
 */
inline auto threshold_line_checks(const Graph& g, ThresholdSide side) -> bool {
  if (side == ThresholdSide::Root) {
    int big = 0;
    for (Mask c : components(g)) {
      if (popcount(c) <= 2) continue;
      if (++big > 1) return false;
      const Graph h = induced_subgraph(g, c);
      bool ok = false;
      for (int a = 0; a < h.order() && !ok; ++a) ok = delete_vertex(h, a).edge_count() <= 1;
      if (!ok) return false;
    }
    return true;
  }
  Mask s = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) s |= bit(v);
  if (!s || is_clique(g, s)) return true;
  for (Mask r = s; r; r &= r - 1) {
    const int v = lowest_bit(r);
    const int d = g.degree(v);
    if ((d == 1 || d == 2) && is_clique(g, s & ~bit(v))) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Mock threshold line graphs via templates

/**
 * Root graphs whose line graphs are the three templates, with m pendant edges
 * where the count is free.  Every pendant edge is already extended once, since
 * in the line graph the first extension hangs off a clique vertex rather than
 * a leaf.
 */
inline auto template_roots(int m) -> std::vector<Graph> {
  auto hang = [](Graph& g, int v) { g.add_vertex(bit(g.add_vertex(bit(v)))); };
  // K4 - e on 0..3 with 1,3 divalent; m pendants at 0, one at 1.
  Graph a(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  for (int i = 0; i < m; ++i) hang(a, 0);
  hang(a, 1);
  // Bowtie with centre 0; m pendants at the centre.
  Graph b(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  for (int i = 0; i < m; ++i) hang(b, 0);
  // K4 with two pendants at 0.
  Graph c = complete_graph(4);
  hang(c, 0);
  hang(c, 0);
  return {a, b, c};
}

/**
 * Linear forest, or one non-path component that reduces (by deleting leaves
 * next to degree-2 vertices) to an induced subgraph of one of the templates.
 */
inline auto mt_line_corollary_check(const Graph& g) -> bool {
  Mask comp = 0;
  const int which = detail::single_non_path_component(g, comp);
  if (which == -1) return true;
  if (which == -2) return false;
  int steps = 0;
  const Graph r = induced_subgraph(g, detail::reduce_leaf_extensions(g, comp, steps));
  for (const Graph& root : template_roots(std::max(2, r.order()))) {
    const Graph t = line_graph(root);
    if (t.order() >= r.order() && contains_induced(t, r)) return true;
  }
  return false;
}

}  // namespace mtlab
