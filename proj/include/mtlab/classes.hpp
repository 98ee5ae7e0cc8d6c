#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contains.hpp"
#include "graph.hpp"
#include "mock_threshold.hpp"

namespace mtlab {

enum class ClassLabel { Threshold, Chordal, Split, WeaklyChordal, Bipartite, ClawFree, Even, Eulerian };

inline constexpr std::array kAllClassLabels{ClassLabel::Threshold, ClassLabel::Chordal,       ClassLabel::Split,
                                            ClassLabel::WeaklyChordal, ClassLabel::Bipartite, ClassLabel::ClawFree,
                                            ClassLabel::Even,      ClassLabel::Eulerian};

inline auto label_name(ClassLabel c) -> std::string {
  switch (c) {
    case ClassLabel::Threshold: return "threshold";
    case ClassLabel::Chordal: return "chordal";
    case ClassLabel::Split: return "split";
    case ClassLabel::WeaklyChordal: return "weakly_chordal";
    case ClassLabel::Bipartite: return "bipartite";
    case ClassLabel::ClawFree: return "claw_free";
    case ClassLabel::Even: return "even";
    case ClassLabel::Eulerian: return "eulerian";
  }
  return "?";
}

/// Small bitset of class labels.
class ClassSet {
 public:
  void insert(ClassLabel c) noexcept { bits_ |= 1U << static_cast<unsigned>(c); }
  auto contains(ClassLabel c) const noexcept -> bool { return (bits_ >> static_cast<unsigned>(c)) & 1U; }
  auto labels() const -> std::vector<ClassLabel> {
    std::vector<ClassLabel> out;
    for (auto c : kAllClassLabels)
      if (contains(c)) out.push_back(c);
    return out;
  }
  friend auto operator==(const ClassSet&, const ClassSet&) -> bool = default;

 private:
  unsigned bits_ = 0;
};

// ---------------------------------------------------------------------------
// Threshold graphs

/// Threshold ordering: each vertex is isolated or dominating in its prefix.  Position 1 is reported isolated.
struct ThresholdOrdering {
  std::vector<int> order;
  std::vector<bool> dominating;
};

inline auto threshold_ordering(const Graph& g) -> std::optional<ThresholdOrdering> {
  Mask alive = g.vertices();
  std::vector<int> removed;
  std::vector<bool> dom;
  while (alive) {
    const int m = popcount(alive);
    int pick = -1;
    bool is_dom = false;
    for (Mask r = alive; r && pick < 0; r &= r - 1) {
      const int v = lowest_bit(r);
      const int d = g.degree_in(v, alive);
      if (d == 0) pick = v;
      else if (d == m - 1) pick = v, is_dom = true;
    }
    if (pick < 0) return std::nullopt;
    removed.push_back(pick);
    dom.push_back(is_dom && m > 1);
    alive &= ~bit(pick);
  }
  ThresholdOrdering out;
  out.order.assign(removed.rbegin(), removed.rend());
  out.dominating.assign(dom.rbegin(), dom.rend());
  return out;
}

inline auto is_threshold(const Graph& g) -> bool { return threshold_ordering(g).has_value(); }

/// Integer weights with uv an edge iff w(u) + w(v) > t.
struct ThresholdWeights {
  std::vector<int> weight;
  int threshold = 0;
};

inline auto verify_threshold_weights(const Graph& g, const ThresholdWeights& c) -> bool {
  if (static_cast<int>(c.weight.size()) != g.order()) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if ((c.weight[u] + c.weight[v] > c.threshold) != g.adjacent(u, v)) return false;
  return true;
}

/**
 * Weights from a threshold ordering: the vertex at position j gets +j if it
 * was added dominating and -j if isolated, with t = 0.  For i < j the sum
 * takes the sign of the later vertex, which is exactly the adjacency rule.
 */
inline auto threshold_weights(const Graph& g) -> std::optional<ThresholdWeights> {
  const auto ord = threshold_ordering(g);
  if (!ord) return std::nullopt;
  ThresholdWeights c;
  c.weight.assign(g.order(), 0);
  for (std::size_t j = 0; j < ord->order.size(); ++j) {
    const int w = static_cast<int>(j) + 1;
    c.weight[ord->order[j]] = ord->dominating[j] ? w : -w;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Cycles, chordality, split graphs

namespace detail {

// Extends the chordless path p[0..len) looking for an induced cycle of length >= min_len through p[0] = min vertex.
inline auto extend_hole(const Graph& g, std::array<int, Graph::kCapacity>& p, int len, Mask on_path,
                        Mask interior_nbrs, int min_len) -> bool {
  const int last = p[len - 1];
  const int start = p[0];
  // Candidates: neighbours of last, above start, off path, not adjacent to interior vertices p[1..len-2].
  Mask cand = g.neighbors(last) & ~on_path & ~low_mask(start + 1) & ~interior_nbrs;
  for (Mask c = cand; c; c &= c - 1) {
    const int x = lowest_bit(c);
    if (g.adjacent(x, start)) {
      if (len + 1 >= min_len && len >= 2) return true;
      continue;
    }
    p[len] = x;
    const Mask new_interior = len >= 2 ? interior_nbrs | g.neighbors(last) : interior_nbrs;
    if (extend_hole(g, p, len + 1, on_path | bit(x), new_interior, min_len)) return true;
  }
  return false;
}

}  // namespace detail

/// True iff g has an induced cycle of length at least min_len (min_len >= 3).
inline auto has_induced_cycle(const Graph& g, int min_len) -> bool {
  std::array<int, Graph::kCapacity> p{};
  for (int s = 0; s < g.order(); ++s) {
    p[0] = s;
    for (Mask c = g.neighbors(s) & ~low_mask(s + 1); c; c &= c - 1) {
      const int x = lowest_bit(c);
      p[1] = x;
      if (detail::extend_hole(g, p, 2, bit(s) | bit(x), 0, min_len)) return true;
    }
  }
  return false;
}

/// True iff g has an induced cycle of odd length at least 5.
inline auto has_odd_hole(const Graph& g) -> bool {
  // Search over induced cycles by length; odd lengths only.
  for (int len = 5; len <= g.order(); len += 2)
    if (contains_induced(g, cycle_graph(len))) return true;
  return false;
}

inline auto is_simplicial(const Graph& g, int v, Mask within) -> bool {
  return is_clique(g, g.neighbors(v) & within);
}

/// Chordal via repeated removal of simplicial vertices.
inline auto is_chordal(const Graph& g) -> bool {
  Mask alive = g.vertices();
  while (alive) {
    int pick = -1;
    for (Mask r = alive; r && pick < 0; r &= r - 1)
      if (is_simplicial(g, lowest_bit(r), alive)) pick = lowest_bit(r);
    if (pick < 0) return false;
    alive &= ~bit(pick);
  }
  return true;
}

inline auto is_weakly_chordal(const Graph& g) -> bool {
  return !has_induced_cycle(g, 5) && !has_induced_cycle(complement(g), 5);
}

/// Split recognition from the degree sequence (largest m with d_m >= m-1).
inline auto is_split(const Graph& g) -> bool {
  const auto d = g.degree_sequence();
  const int n = g.order();
  int m = 0;
  for (int i = 1; i <= n; ++i)
    if (d[i - 1] >= i - 1) m = i;
  long lhs = 0, rhs = static_cast<long>(m) * (m - 1);
  for (int i = 0; i < n; ++i) (i < m ? lhs : rhs) += d[i];
  return lhs == rhs;
}

/// Split recognition by trying every clique as the clique side.
inline auto is_split_brute(const Graph& g) -> bool {
  if (g.order() > 20) throw CapacityError("is_split_brute: limited to 20 vertices");
  const Mask all = g.vertices();
  bool found = false;
  auto grow = [&](auto&& self, Mask clique, Mask cand) -> void {
    if (found) return;
    if (is_stable(g, all & ~clique)) {
      found = true;
      return;
    }
    for (Mask c = cand; c && !found; c &= c - 1) {
      const int v = lowest_bit(c);
      self(self, clique | bit(v), cand & g.neighbors(v) & ~low_mask(v + 1));
    }
  };
  grow(grow, 0, all);
  return found;
}

/// One side of a proper 2-colouring, or nullopt if g has an odd cycle.
inline auto bipartition(const Graph& g) -> std::optional<Mask> {
  std::vector<int> color(g.order(), -1);
  Mask side = 0;
  std::vector<int> queue;
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int u = queue[h];
      if (color[u] == 0) side |= bit(u);
      for (Mask r = g.neighbors(u); r; r &= r - 1) {
        const int w = lowest_bit(r);
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

inline auto is_bipartite(const Graph& g) -> bool { return bipartition(g).has_value(); }

inline auto is_claw_free(const Graph& g) -> bool { return !contains_induced(g, star_graph(3)); }

inline auto is_even(const Graph& g) -> bool {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2) return false;
  return true;
}

inline auto is_eulerian(const Graph& g) -> bool { return g.order() > 0 && is_even(g) && is_connected(g); }

inline auto classify(const Graph& g) -> ClassSet {
  ClassSet s;
  if (is_threshold(g)) s.insert(ClassLabel::Threshold);
  if (is_chordal(g)) s.insert(ClassLabel::Chordal);
  if (is_split(g)) s.insert(ClassLabel::Split);
  if (is_weakly_chordal(g)) s.insert(ClassLabel::WeaklyChordal);
  if (is_bipartite(g)) s.insert(ClassLabel::Bipartite);
  if (is_claw_free(g)) s.insert(ClassLabel::ClawFree);
  if (is_even(g)) s.insert(ClassLabel::Even);
  if (is_eulerian(g)) s.insert(ClassLabel::Eulerian);
  return s;
}

// ---------------------------------------------------------------------------
// Exhaustive invariants

inline auto max_clique_in(const Graph& g, Mask cand) -> int {
  int best = 0;
  auto expand = [&](auto&& self, Mask p, int size) -> void {
    if (!p) {
      best = std::max(best, size);
      return;
    }
    if (size + popcount(p) <= best) return;
    while (p) {
      if (size + popcount(p) <= best) return;
      const int v = lowest_bit(p);
      p &= p - 1;
      self(self, p & g.neighbors(v), size + 1);
    }
  };
  expand(expand, cand, 0);
  return best;
}

inline auto brute_clique_number(const Graph& g) -> int {
  if (g.order() > 32) throw CapacityError("brute_clique_number: limited to 32 vertices");
  return max_clique_in(g, g.vertices());
}

inline auto brute_independence_number(const Graph& g) -> int {
  if (g.order() > 32) throw CapacityError("brute_independence_number: limited to 32 vertices");
  return max_clique_in(complement(g), g.vertices());
}

inline auto is_k_colorable(const Graph& g, Mask vertices, int k) -> bool {
  std::array<Mask, Graph::kCapacity> color_class{};
  std::vector<int> order;
  for_each_bit(vertices, [&](int v) { order.push_back(v); });
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree_in(a, vertices) > g.degree_in(b, vertices); });
  auto place = [&](auto&& self, std::size_t i, int used) -> bool {
    if (i == order.size()) return true;
    const int v = order[i];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      if (color_class[c] & g.neighbors(v)) continue;
      color_class[c] |= bit(v);
      const bool ok = self(self, i + 1, std::max(used, c + 1));
      color_class[c] &= ~bit(v);
      if (ok) return true;
    }
    return false;
  };
  return place(place, 0, 0);
}

inline auto chromatic_number_in(const Graph& g, Mask vertices) -> int {
  if (!vertices) return 0;
  int k = std::max(1, max_clique_in(g, vertices));
  while (!is_k_colorable(g, vertices, k)) ++k;
  return k;
}

inline auto brute_chromatic_number(const Graph& g) -> int {
  if (g.order() > 16) throw CapacityError("brute_chromatic_number: limited to 16 vertices");
  return chromatic_number_in(g, g.vertices());
}

struct BruteInvariants {
  int omega = 0;
  int chi = 0;
  int alpha = 0;
  friend auto operator==(const BruteInvariants&, const BruteInvariants&) -> bool = default;
};

inline auto brute_invariants(const Graph& g) -> BruteInvariants {
  return {brute_clique_number(g), brute_chromatic_number(g), brute_independence_number(g)};
}

/// Perfection by checking omega = chi on every induced subgraph.
inline auto is_perfect_small(const Graph& g) -> bool {
  if (g.order() > 10) throw CapacityError("is_perfect_small: limited to 10 vertices");
  const Mask all = g.vertices();
  for (Mask s = 1; s <= all && s != 0; ++s)
    if (max_clique_in(g, s) != chromatic_number_in(g, s)) return false;
  return true;
}

/// Perfection by the absence of odd holes and odd antiholes.
inline auto is_perfect_by_holes(const Graph& g) -> bool { return !has_odd_hole(g) && !has_odd_hole(complement(g)); }

// ---------------------------------------------------------------------------
// Bipartite mock threshold graphs

struct BipartiteMTShape {
  enum class Kind { Forest, K2sWithTrees, NotBipartiteMT };
  Kind kind = Kind::NotBipartiteMT;
  int s = 0;                                ///< K_{2,s} part size, when kind == K2sWithTrees
  std::vector<std::pair<int, int>> trees;   ///< (core vertex, vertices in the tree hanging there)
};

inline auto classify_bipartite_mt(const Graph& g) -> BipartiteMTShape {
  if (!is_bipartite(g)) throw std::invalid_argument("classify_bipartite_mt: graph is not bipartite");
  BipartiteMTShape out;
  if (is_forest(g)) {
    out.kind = BipartiteMTShape::Kind::Forest;
    return out;
  }
  int cyclic = 0;
  for (Mask c : components(g)) {
    const Graph h = induced_subgraph(g, c);
    if (h.edge_count() != h.order() - 1) ++cyclic;
  }
  if (cyclic != 1) return out;

  const Mask core = k_core_vertices(g, 2);
  const Graph k = induced_subgraph(g, core);
  const Mask left = *bipartition(k);
  const Mask right = k.vertices() & ~left;
  const int a = popcount(left), b = popcount(right);
  if (std::min(a, b) != 2 || k.edge_count() != a * b) return out;

  out.kind = BipartiteMTShape::Kind::K2sWithTrees;
  out.s = std::max(a, b);
  const Mask outside = g.vertices() & ~core;
  for_each_bit(core, [&](int v) {
    const int size = popcount(component_of(g, v, outside | bit(v))) - 1;
    if (size > 0) out.trees.emplace_back(v, size);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Chordal mock threshold graphs

/**
 * Searches for an MT-ordering in which the unique earlier non-neighbour of
 * every near-dominating vertex is simplicial in the prefix.  Exhaustive with
 * memoised dead ends, so limited to 16 vertices.
 */
inline auto chordal_mt_witness(const Graph& g) -> std::optional<MTOrder> {
  if (g.order() > 16) throw CapacityError("chordal_mt_witness: limited to 16 vertices");
  if (!is_mock_threshold(g)) throw std::invalid_argument("chordal_mt_witness: graph is not mock threshold");
  std::vector<char> dead(std::size_t{1} << g.order(), 0);
  std::vector<int> tail;  // chosen from the back

  auto solve = [&](auto&& self, Mask s) -> bool {
    if (!s) return true;
    if (dead[s]) return false;
    const int i = popcount(s);
    for (Mask r = s; r; r &= r - 1) {
      const int v = lowest_bit(r);
      const int d = g.degree_in(v, s);
      if (d != 0 && d != 1 && d != i - 2 && d != i - 1) continue;
      if (d == i - 2 && i >= 2) {
        const Mask non = s & ~g.neighbors(v) & ~bit(v);
        if (!is_simplicial(g, lowest_bit(non), s)) continue;
      }
      tail.push_back(v);
      if (self(self, s & ~bit(v))) return true;
      tail.pop_back();
    }
    dead[s] = 1;
    return false;
  };
  if (!solve(solve, g.vertices())) return std::nullopt;
  std::vector<int> order(tail.rbegin(), tail.rend());
  return make_certificate(g, order, 1);
}

// ---------------------------------------------------------------------------
// Claw-free threshold and even threshold graphs

/// Isolated vertices plus at most one component having a vertex whose deletion leaves a complete graph.
inline auto clawfree_threshold_check(const Graph& g) -> bool {
  int big = 0;
  for (Mask c : components(g)) {
    if (popcount(c) == 1) continue;
    if (++big > 1) return false;
    bool ok = false;
    for_each_bit(c, [&](int v) { ok = ok || is_clique(g, c & ~bit(v)); });
    if (!ok) return false;
  }
  return true;
}

/**
 * Parity of a threshold graph read off a threshold ordering (position 1
 * counted as isolated).  A dominating vertex at position j has degree
 * (j-1) plus the number of later dominating vertices, and an isolated one has
 * just the later count.  So every degree is even iff each maximal run of
 * dominating vertices has even length and ends at an odd position.
 */
inline auto even_threshold_check(const Graph& g) -> bool {
  const auto ord = threshold_ordering(g);
  if (!ord) throw std::invalid_argument("even_threshold_check: graph is not threshold");
  const int n = g.order();
  for (int j = 0; j < n;) {
    if (!ord->dominating[j]) {
      ++j;
      continue;
    }
    int end = j;
    while (end + 1 < n && ord->dominating[end + 1]) ++end;
    const int length = end - j + 1;
    const int last_position = end + 1;  // 1-based
    if (length % 2 != 0 || last_position % 2 == 0) return false;
    j = end + 1;
  }
  return true;
}

/// The run-length rule read literally: every run of dominating vertices has even length.
inline auto even_threshold_runs_only(const Graph& g) -> bool {
  const auto ord = threshold_ordering(g);
  if (!ord) throw std::invalid_argument("even_threshold_runs_only: graph is not threshold");
  int run = 0;
  for (bool d : ord->dominating) {
    if (d) {
      ++run;
    } else {
      if (run % 2) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

/// Even, and the last vertex of the threshold ordering is dominating (a single vertex counts), and connected.
inline auto eulerian_threshold_check(const Graph& g) -> bool {
  if (!even_threshold_check(g)) return false;
  if (g.order() == 0) return false;
  const auto ord = threshold_ordering(g);
  const bool last_dominating = g.order() == 1 || ord->dominating.back();
  return last_dominating && is_connected(g);
}

}  // namespace mtlab
