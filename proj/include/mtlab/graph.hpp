#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"

namespace mtlab {

/// Thrown when an operation would need more than Graph::kCapacity vertices.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/**
 * Simple undirected graph on at most 64 vertices.
 *
 * Each vertex owns one neighbour bitmask.  Rows beyond order() are kept zero so
 * that the defaulted comparison is exact.
 */
class Graph {
 public:
  static constexpr int kCapacity = 64;

  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kCapacity)
      throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity 64");
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  auto order() const noexcept -> int { return n_; }
  auto vertices() const noexcept -> Mask { return low_mask(n_); }

  auto neighbors(int v) const noexcept -> Mask { return adj_[v]; }
  auto adjacent(int u, int v) const noexcept -> bool { return (adj_[u] >> v) & 1U; }
  auto degree(int v) const noexcept -> int { return popcount(adj_[v]); }
  auto codegree(int v) const noexcept -> int { return n_ - 1 - degree(v); }

  /// Degree of v counted inside the vertex set s.
  auto degree_in(int v, Mask s) const noexcept -> int { return popcount(adj_[v] & s); }

  auto edge_count() const noexcept -> int {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  /// Appends a vertex adjacent to exactly the vertices in nbrs; returns its index.
  auto add_vertex(Mask nbrs = 0) -> int {
    if (n_ == kCapacity) throw CapacityError("cannot add a 65th vertex");
    if (nbrs & ~vertices()) throw std::out_of_range("neighbour outside the graph");
    const int v = n_++;
    adj_[v] = nbrs;
    for_each_bit(nbrs, [&](int u) { adj_[u] |= bit(v); });
    return v;
  }

  auto edges() const -> std::vector<std::pair<int, int>> {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for_each_bit(adj_[u] & ~low_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  auto degree_sequence() const -> std::vector<int> {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
  }

  auto min_degree() const noexcept -> int {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
  }

  auto max_degree() const noexcept -> int {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  /// Vertices relabelled so that old vertex v becomes perm[v].
  auto relabeled(std::span<const int> perm) const -> Graph {
    Graph h(n_);
    for (int u = 0; u < n_; ++u) {
      Mask row = 0;
      for_each_bit(adj_[u], [&](int v) { row |= bit(perm[v]); });
      h.adj_[perm[u]] = row;
    }
    return h;
  }

  friend auto operator==(const Graph&, const Graph&) -> bool = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
  }

  int n_ = 0;
  std::array<Mask, kCapacity> adj_{};
};

// ---------------------------------------------------------------------------
// Named families

inline auto empty_graph(int n) -> Graph { return Graph(n); }

inline auto complete_graph(int n) -> Graph {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline auto path_graph(int n) -> Graph {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline auto cycle_graph(int n) -> Graph {
  if (n < 3) throw std::invalid_argument("cycles need at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

/// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
inline auto complete_bipartite(int a, int b) -> Graph {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

/// K_{1,k} with centre 0.
inline auto star_graph(int k) -> Graph { return complete_bipartite(1, k); }

inline auto from_edges(int n, std::span<const std::pair<int, int>> edges) -> Graph {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline auto disjoint_union(const Graph& a, const Graph& b) -> Graph {
  if (a.order() + b.order() > Graph::kCapacity) throw CapacityError("disjoint union exceeds capacity 64");
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

// ---------------------------------------------------------------------------
// Basic operations

inline auto complement(const Graph& g) -> Graph {
  const Mask all = g.vertices();
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for_each_bit(all & ~g.neighbors(u) & ~low_mask(u + 1), [&](int v) { c.add_edge(u, v); });
  return c;
}

/// Subgraph induced on s; vertices keep their relative order.
inline auto induced_subgraph(const Graph& g, Mask s) -> Graph {
  if (s & ~g.vertices()) throw std::out_of_range("induced_subgraph: vertex out of range");
  std::array<int, Graph::kCapacity> index{};
  int k = 0;
  for_each_bit(s, [&](int v) { index[v] = k++; });
  Graph h(k);
  for_each_bit(s, [&](int u) {
    for_each_bit(g.neighbors(u) & s & ~low_mask(u + 1), [&](int v) { h.add_edge(index[u], index[v]); });
  });
  return h;
}

inline auto induced_subgraph(const Graph& g, std::span<const int> vs) -> Graph {
  Mask s = 0;
  for (int v : vs) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
    s |= bit(v);
  }
  return induced_subgraph(g, s);
}

inline auto delete_vertex(const Graph& g, int v) -> Graph {
  return induced_subgraph(g, g.vertices() & ~bit(v));
}

/**
 * Contracts the edge uv.  The merged vertex takes the smaller index slot and
 * is adjacent to N(u) | N(v) minus {u, v}; vertices above the larger index
 * shift down by one.
 */
inline auto contract_edge(const Graph& g, int u, int v) -> Graph {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !g.adjacent(u, v))
    throw std::invalid_argument("contract_edge: not an edge");
  if (u > v) std::swap(u, v);
  Graph merged = g;
  const Mask nbrs = (g.neighbors(u) | g.neighbors(v)) & ~bit(u) & ~bit(v);
  for (int w = 0; w < g.order(); ++w)
    if (w != u && w != v && g.adjacent(u, w)) merged.remove_edge(u, w);
  for_each_bit(nbrs, [&](int w) { merged.add_edge(u, w); });
  return delete_vertex(merged, v);
}

/// Fixed point of deleting vertices with fewer than k neighbours; returns the surviving set.
inline auto k_core_vertices(const Graph& g, int k) -> Mask {
  Mask alive = g.vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for_each_bit(alive, [&](int v) {
      if (g.degree_in(v, alive) < k) {
        alive &= ~bit(v);
        changed = true;
      }
    });
  }
  return alive;
}

inline auto k_core(const Graph& g, int k) -> Graph { return induced_subgraph(g, k_core_vertices(g, k)); }

/// Vertex set of the connected component containing v.
inline auto component_of(const Graph& g, int v, Mask within) -> Mask {
  Mask seen = bit(v), frontier = bit(v);
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int u) { next |= g.neighbors(u); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline auto component_of(const Graph& g, int v) -> Mask { return component_of(g, v, g.vertices()); }

/// Connected components as vertex masks, ordered by smallest vertex.
inline auto components(const Graph& g) -> std::vector<Mask> {
  std::vector<Mask> out;
  Mask rest = g.vertices();
  while (rest) {
    const Mask c = component_of(g, lowest_bit(rest), rest);
    out.push_back(c);
    rest &= ~c;
  }
  return out;
}

inline auto is_connected(const Graph& g) -> bool {
  return g.order() == 0 || component_of(g, 0) == g.vertices();
}

inline auto is_forest(const Graph& g) -> bool {
  return g.edge_count() == g.order() - static_cast<int>(components(g).size());
}

/// True iff every component is a path (isolated vertices count as paths).
inline auto is_linear_forest(const Graph& g) -> bool { return g.max_degree() <= 2 && is_forest(g); }

inline auto is_clique(const Graph& g, Mask s) -> bool {
  bool ok = true;
  for_each_bit(s, [&](int v) { ok = ok && (g.neighbors(v) & s) == (s & ~bit(v)); });
  return ok;
}

inline auto is_stable(const Graph& g, Mask s) -> bool {
  bool ok = true;
  for_each_bit(s, [&](int v) { ok = ok && (g.neighbors(v) & s) == 0; });
  return ok;
}

}  // namespace mtlab
