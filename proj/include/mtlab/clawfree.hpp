#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "classes.hpp"
#include "graph.hpp"

namespace mtlab {

/// Shapes of the complement of the 2-core of a claw-free mock threshold graph.
enum class ClawFreeType { I = 1, II, III, IV, V, VI, VII, VIII, IX };

inline auto type_name(ClawFreeType t) -> std::string {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
  return names[static_cast<int>(t) - 1];
}

inline auto clawfree_type_from_name(const std::string& s) -> ClawFreeType {
  for (int i = 1; i <= 9; ++i)
    if (type_name(static_cast<ClawFreeType>(i)) == s) return static_cast<ClawFreeType>(i);
  throw std::invalid_argument("unknown claw-free type '" + s + "'");
}

/**
 * Parameters for the generator and for reporting a match.  Which fields are
 * used depends on the type:
 *   I     forest: parent[i] < i or -1 for a new root
 *   II    s, plus parent[] for extra vertices numbered from s+2 (K_{2,s} is 0..s+1, sides {0,1} and 2..s+1)
 *   III   pendants[0..2] at the triangle vertices
 *   IV    p = |Z|, s = |Y|, beta = pendant edges at w, x2_links = |N(x2) in Y|
 *   V-IX  r = |X|, alpha / beta pendant edges at v / w, p = |P|, q = |Q|, s = |Y|
 */
struct ClawFreeParams {
  int r = 0, s = 0, p = 0, q = 0, alpha = 0, beta = 0, x2_links = 0;
  std::vector<int> pendants;
  std::vector<int> parent;
};

struct ClawFreeMTLabel {
  enum class Kind { LinearForest, Structured, NotInClass };
  Kind kind = Kind::NotInClass;
  std::optional<ClawFreeType> type;
  ClawFreeParams params;
  std::vector<std::pair<int, int>> hanging_paths;  ///< (core vertex, path length)
  std::string reason;

  explicit operator bool() const noexcept { return kind != Kind::NotInClass; }
};

namespace detail {

// Edge list builder used both by the generators and to rebuild a candidate match.
struct Builder {
  Graph g{0};
  auto add(int count = 1) -> int {
    const int first = g.order();
    for (int i = 0; i < count; ++i) g.add_vertex(0);
    return first;
  }
  void edge(int u, int v) { g.add_edge(u, v); }
};

// Maps vertex roles of H into a fresh graph and compares with H under that map.
inline auto same_edges(const Graph& h, const std::vector<int>& roles_to_h, const Graph& expected) -> bool {
  if (expected.order() != h.order() || expected.edge_count() != h.edge_count()) return false;
  for (auto [a, b] : expected.edges())
    if (!h.adjacent(roles_to_h[a], roles_to_h[b])) return false;
  return true;
}

inline auto leaves_in(const Graph& h, Mask s) -> Mask {
  Mask out = 0;
  for_each_bit(s, [&](int v) {
    if (h.degree(v) == 1) out |= bit(v);
  });
  return out;
}

inline auto min_codegree_at_least_two(const Graph& h) -> bool {
  for (int v = 0; v < h.order(); ++v)
    if (h.codegree(v) < 2) return false;
  return true;
}

inline auto as_list(Mask m) -> std::vector<int> {
  std::vector<int> out;
  for_each_bit(m, [&](int v) { out.push_back(v); });
  return out;
}

inline auto match_type_iii(const Graph& h, ClawFreeParams& out) -> bool {
  // Exactly one triangle; everything else is a leaf on it.
  std::vector<std::array<int, 3>> triangles;
  for (auto [u, v] : h.edges())
    for_each_bit(h.neighbors(u) & h.neighbors(v) & ~low_mask(v + 1), [&](int w) { triangles.push_back({u, v, w}); });
  if (triangles.size() != 1) return false;
  const auto t = triangles[0];
  const Mask tri = bit(t[0]) | bit(t[1]) | bit(t[2]);
  out.pendants.assign(3, 0);
  int with_pendants = 0;
  for (int i = 0; i < 3; ++i) {
    const Mask outside = h.neighbors(t[i]) & ~tri;
    if (leaves_in(h, outside) != outside) return false;
    out.pendants[i] = popcount(outside);
    with_pendants += out.pendants[i] > 0;
  }
  int covered = 3;
  for (int c : out.pendants) covered += c;
  return covered == h.order() && with_pendants >= 2;
}

inline auto match_type_iv(const Graph& h, ClawFreeParams& out) -> bool {
  const int n = h.order();
  for (int w = 0; w < n; ++w) {
    const Mask nw = h.neighbors(w);
    const Mask b = leaves_in(h, nw);
    const Mask z = h.vertices() & ~nw & ~bit(w);
    if (!b || popcount(z) < 2) continue;
    const Mask x = h.neighbors(lowest_bit(z));
    if (popcount(x) != 2 || (x & ~nw)) continue;
    const Mask y = nw & ~x & ~b;
    if (popcount(y) < 2) continue;
    const int xa = lowest_bit(x), xb = lowest_bit(x & (x - 1));
    for (auto [x1, x2] : {std::pair{xa, xb}, std::pair{xb, xa}}) {
      if ((h.neighbors(x1) & y) != y) continue;
      const Mask links = h.neighbors(x2) & y;
      if (!links) continue;
      // rebuild
      std::vector<int> map;
      Builder e;
      auto place = [&](int hv) {
        map.push_back(hv);
        return e.add();
      };
      const int W = place(w), X1 = place(x1), X2 = place(x2);
      e.edge(W, X1);
      e.edge(W, X2);
      for (int v : as_list(z)) {
        const int Z = place(v);
        e.edge(Z, X1);
        e.edge(Z, X2);
      }
      for (int v : as_list(y)) {
        const int Y = place(v);
        e.edge(Y, W);
        e.edge(Y, X1);
        if (links & bit(v)) e.edge(Y, X2);
      }
      for (int v : as_list(b)) e.edge(place(v), W);
      if (static_cast<int>(map.size()) != n || !same_edges(h, map, e.g)) continue;
      out.p = popcount(z);
      out.s = popcount(y);
      out.beta = popcount(b);
      out.x2_links = popcount(links);
      return true;
    }
  }
  return false;
}

// Types V..IX share the K_{1,1,r} on {v}, {w}, X.
inline auto match_v_to_ix(const Graph& h, ClawFreeType t, ClawFreeParams& out) -> bool {
  const int n = h.order();
  for (auto [v, w] : h.edges()) {
    for (auto [a0, b0] : {std::pair{v, w}, std::pair{w, v}}) {
      const int V = a0, W = b0;
      const Mask x = h.neighbors(V) & h.neighbors(W);
      const int r = popcount(x);
      if (r < 2 || !is_stable(h, x)) continue;
      const Mask a = h.neighbors(V) & ~x & ~bit(W);
      const Mask b = h.neighbors(W) & ~x & ~bit(V);
      const Mask rest = h.vertices() & ~(bit(V) | bit(W) | x | a | b);
      const Mask a_leaves = leaves_in(h, a), b_leaves = leaves_in(h, b);
      const Mask a_other = a & ~a_leaves, b_other = b & ~b_leaves;

      std::vector<int> map;
      Builder e;
      auto place = [&](int hv) {
        map.push_back(hv);
        return e.add();
      };
      const int PV = place(V), PW = place(W);
      e.edge(PV, PW);
      std::vector<int> px;
      for (int u : as_list(x)) {
        px.push_back(place(u));
        e.edge(px.back(), PV);
        e.edge(px.back(), PW);
      }
      for (int u : as_list(a_leaves)) e.edge(place(u), PV);
      for (int u : as_list(b_leaves)) e.edge(place(u), PW);
      const int alpha = popcount(a_leaves), beta = popcount(b_leaves);
      ClawFreeParams got;
      got.r = r;
      got.alpha = alpha;
      got.beta = beta;

      bool ok = false;
      switch (t) {
        case ClawFreeType::V:
          ok = !a_other && !b_other && !rest && alpha >= 2 && beta >= 2;
          break;
        case ClawFreeType::VI: {
          if (popcount(a_other) != 1 || !b_other || rest) break;
          const int z = lowest_bit(a_other);
          const int PZ = place(z);
          e.edge(PZ, PV);
          for (int u : as_list(b_other)) {
            const int PP = place(u);
            e.edge(PP, PW);
            e.edge(PP, PZ);
          }
          got.p = popcount(b_other);
          ok = alpha >= 1 && (got.p != 1 || beta >= 1);
          break;
        }
        case ClawFreeType::VII:
        case ClawFreeType::VIII: {
          if (a_other || popcount(rest) != 1) break;
          const int PY = place(lowest_bit(rest));
          for (int u : px) e.edge(PY, u);
          for (int u : as_list(b_other)) {
            const int PQ = place(u);
            e.edge(PQ, PW);
            e.edge(PQ, PY);
          }
          got.q = popcount(b_other);
          ok = t == ClawFreeType::VII ? (got.q == 0 && alpha >= 1 && beta >= 1) : (got.q >= 1 && alpha >= 1);
          break;
        }
        case ClawFreeType::IX: {
          if (a_other || b_other || !rest) break;
          for (int u : as_list(rest)) {
            const int PY = place(u);
            for (int xv : px) e.edge(PY, xv);
          }
          got.s = popcount(rest);
          ok = r != 2 || alpha + beta > 0;
          break;
        }
        default:
          break;
      }
      if (!ok || static_cast<int>(map.size()) != n || !same_edges(h, map, e.g)) continue;
      out = got;
      return true;
    }
  }
  return false;
}

inline auto match_type(const Graph& h, ClawFreeType t, ClawFreeParams& out) -> bool {
  switch (t) {
    case ClawFreeType::I:
      return h.order() >= 3 && is_forest(h) && min_codegree_at_least_two(h);
    case ClawFreeType::II: {
      if (!is_bipartite(h) || !min_codegree_at_least_two(h)) return false;
      const auto shape = classify_bipartite_mt(h);
      if (shape.kind != BipartiteMTShape::Kind::K2sWithTrees) return false;
      out.s = shape.s;
      return true;
    }
    case ClawFreeType::III:
      return match_type_iii(h, out);
    case ClawFreeType::IV:
      return match_type_iv(h, out);
    default:
      return match_v_to_ix(h, t, out);
  }
}

}  // namespace detail

/**
 * Structural recognition of claw-free mock threshold graphs.  Paths are
 * accepted outright; otherwise the one non-path component is split into its
 * 2-core and the paths hanging from it, and the complement of the 2-core is
 * matched against Types I to IX in order, first match wins.
 */
inline auto classify_clawfree_mt(const Graph& g) -> ClawFreeMTLabel {
  ClawFreeMTLabel out;
  Mask component = 0;
  for (Mask c : components(g)) {
    if (is_linear_forest(induced_subgraph(g, c))) continue;
    if (component) {
      out.reason = "more than one non-path component";
      return out;
    }
    component = c;
  }
  if (!component) {
    out.kind = ClawFreeMTLabel::Kind::LinearForest;
    return out;
  }

  const Graph g1 = induced_subgraph(g, component);
  std::vector<int> original;
  for_each_bit(component, [&](int v) { original.push_back(v); });
  const Mask core = k_core_vertices(g1, 2);
  if (!core) {
    out.reason = "non-path tree component";
    return out;
  }
  const Mask hanging = g1.vertices() & ~core;
  for (Mask r = hanging; r; r &= r - 1)
    if (g1.degree(lowest_bit(r)) > 2) {
      out.reason = "hanging part is not a path";
      return out;
    }
  for (Mask r = core; r; r &= r - 1) {
    const int c = lowest_bit(r);
    const Mask attached = g1.neighbors(c) & hanging;
    if (!attached) continue;
    if (popcount(attached) > 1) {
      out.reason = "more than one path at a core vertex";
      return out;
    }
    if (!is_clique(g1, g1.neighbors(c) & core)) {
      out.reason = "path attached at a vertex whose core neighbourhood is not a clique";
      return out;
    }
    out.hanging_paths.emplace_back(original[c], popcount(component_of(g1, lowest_bit(attached), hanging)));
  }

  const Graph h = complement(induced_subgraph(g1, core));
  for (int t = 1; t <= 9; ++t) {
    ClawFreeParams params;
    if (detail::match_type(h, static_cast<ClawFreeType>(t), params)) {
      out.kind = ClawFreeMTLabel::Kind::Structured;
      out.type = static_cast<ClawFreeType>(t);
      out.params = std::move(params);
      return out;
    }
  }
  out.hanging_paths.clear();
  out.reason = "2-core complement matches no type";
  return out;
}

/**
 * Builds the complement-of-2-core graph H for a type; the claw-free mock
 * threshold graph itself is complement(H).  Throws std::invalid_argument when
 * the parameters fall outside the type's bounds.
 */
inline auto generate_clawfree_type(ClawFreeType t, const ClawFreeParams& p) -> Graph {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("generate_clawfree_type: ") + what);
  };
  detail::Builder e;
  switch (t) {
    case ClawFreeType::I: {
      const int n = static_cast<int>(p.parent.size());
      require(n >= 3, "type I needs at least 3 vertices");
      e.add(n);
      for (int i = 0; i < n; ++i) {
        require(p.parent[i] < i && p.parent[i] >= -1, "type I parent must precede the vertex");
        if (p.parent[i] >= 0) e.edge(i, p.parent[i]);
      }
      require(detail::min_codegree_at_least_two(e.g), "type I needs two non-neighbours at every vertex");
      break;
    }
    case ClawFreeType::II: {
      require(p.s >= 2, "type II needs s >= 2");
      e.add(p.s + 2);
      for (int j = 2; j < p.s + 2; ++j) {
        e.edge(0, j);
        e.edge(1, j);
      }
      for (std::size_t i = 0; i < p.parent.size(); ++i) {
        const int v = e.add();
        require(p.parent[i] < v && p.parent[i] >= -1, "type II parent must precede the vertex");
        if (p.parent[i] >= 0) e.edge(v, p.parent[i]);
      }
      require(detail::min_codegree_at_least_two(e.g), "type II needs two non-neighbours at every vertex");
      break;
    }
    case ClawFreeType::III: {
      require(p.pendants.size() == 3, "type III needs three pendant counts");
      int nonzero = 0;
      for (int c : p.pendants) {
        require(c >= 0, "pendant counts must be non-negative");
        nonzero += c > 0;
      }
      require(nonzero >= 2, "type III needs pendants at two or more triangle vertices");
      e.add(3);
      e.edge(0, 1);
      e.edge(1, 2);
      e.edge(0, 2);
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < p.pendants[i]; ++k) e.edge(e.add(), i);
      break;
    }
    case ClawFreeType::IV: {
      require(p.p >= 2 && p.s >= 2 && p.beta >= 1, "type IV needs p >= 2, s >= 2 and a pendant at w");
      require(p.x2_links >= 1 && p.x2_links <= p.s, "type IV needs 1 <= x2_links <= s");
      const int w = e.add(), x1 = e.add(), x2 = e.add();
      e.edge(w, x1);
      e.edge(w, x2);
      for (int i = 0; i < p.p; ++i) {
        const int z = e.add();
        e.edge(z, x1);
        e.edge(z, x2);
      }
      for (int i = 0; i < p.s; ++i) {
        const int y = e.add();
        e.edge(y, w);
        e.edge(y, x1);
        if (i < p.x2_links) e.edge(y, x2);
      }
      for (int i = 0; i < p.beta; ++i) e.edge(e.add(), w);
      break;
    }
    default: {
      require(p.r >= 2, "types V-IX need r >= 2");
      require(p.alpha >= 0 && p.beta >= 0, "pendant counts must be non-negative");
      const int v = e.add(), w = e.add();
      e.edge(v, w);
      std::vector<int> xs;
      for (int i = 0; i < p.r; ++i) {
        xs.push_back(e.add());
        e.edge(xs.back(), v);
        e.edge(xs.back(), w);
      }
      if (t == ClawFreeType::V) {
        require(p.alpha >= 2 && p.beta >= 2, "type V needs alpha, beta >= 2");
      } else if (t == ClawFreeType::VI) {
        require(p.p >= 1 && p.alpha >= 1, "type VI needs p >= 1 and alpha >= 1");
        require(p.p != 1 || p.beta >= 1, "type VI needs beta >= 1 when p = 1");
        const int z = e.add();
        e.edge(z, v);
        for (int i = 0; i < p.p; ++i) {
          const int u = e.add();
          e.edge(u, w);
          e.edge(u, z);
        }
      } else if (t == ClawFreeType::VII || t == ClawFreeType::VIII) {
        if (t == ClawFreeType::VII) require(p.alpha >= 1 && p.beta >= 1, "type VII needs alpha, beta >= 1");
        else require(p.q >= 1 && p.alpha >= 1, "type VIII needs q >= 1 and alpha >= 1");
        const int y = e.add();
        for (int x : xs) e.edge(y, x);
        if (t == ClawFreeType::VIII)
          for (int i = 0; i < p.q; ++i) {
            const int u = e.add();
            e.edge(u, w);
            e.edge(u, y);
          }
      } else {
        require(p.s >= 1, "type IX needs s >= 1");
        require(p.r != 2 || p.alpha + p.beta > 0, "type IX needs alpha + beta > 0 when r = 2");
        for (int i = 0; i < p.s; ++i) {
          const int y = e.add();
          for (int x : xs) e.edge(y, x);
        }
      }
      for (int i = 0; i < p.alpha; ++i) e.edge(e.add(), v);
      for (int i = 0; i < p.beta; ++i) e.edge(e.add(), w);
      break;
    }
  }
  return e.g;
}

}  // namespace mtlab
