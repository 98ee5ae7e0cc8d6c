#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canon.hpp"
#include "graph.hpp"
#include "graph6.hpp"

namespace mtlab {

inline constexpr int kMaxEnumerationOrder = 12;

/// Graph on at most 16 vertices in 33 bytes, for storing whole generation levels.
class PackedGraph {
 public:
  PackedGraph() = default;
  explicit PackedGraph(const Graph& g) : n_(static_cast<std::uint8_t>(g.order())) {
    if (g.order() > 16) throw CapacityError("PackedGraph holds at most 16 vertices");
    for (int v = 0; v < g.order(); ++v) rows_[v] = static_cast<std::uint16_t>(g.neighbors(v));
  }

  auto unpack() const -> Graph {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if ((rows_[u] >> v) & 1U) g.add_edge(u, v);
    return g;
  }

  auto order() const noexcept -> int { return n_; }

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint16_t, 16> rows_{};
};

/// Half-open range of parent indices processed as one unit of work.
struct Shard {
  std::size_t first = 0;
  std::size_t last = 0;
};

/// Fixed-size shards so that boundaries do not depend on the worker count.
inline auto plan_shards(std::size_t count, std::size_t shard_size) -> std::vector<Shard> {
  if (shard_size == 0) throw std::invalid_argument("shard size must be positive");
  std::vector<Shard> out;
  for (std::size_t i = 0; i < count; i += shard_size) out.push_back({i, std::min(count, i + shard_size)});
  return out;
}

namespace detail {

// Key used to pick the canonical deletion vertex: degree, then the sum of neighbour degrees.
inline auto deletion_keys(const Graph& g) -> std::array<int, Graph::kCapacity> {
  std::array<int, Graph::kCapacity> deg{}, key{};
  const int n = g.order();
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int v = 0; v < n; ++v) {
    int s = 0;
    for_each_bit(g.neighbors(v), [&](int u) { s += deg[u]; });
    key[v] = deg[v] * 4096 + s;
  }
  return key;
}

inline auto image(Mask s, const std::array<std::uint8_t, Graph::kCapacity>& gamma) -> Mask {
  Mask out = 0;
  for_each_bit(s, [&](int v) { out |= bit(gamma[v]); });
  return out;
}

}  // namespace detail

/**
 * One step of canonical augmentation.  Every child adds vertex n to the
 * parent with some neighbourhood; neighbourhoods equivalent under Aut(parent)
 * are tried once, and a child is kept only if the new vertex lies in the
 * automorphism orbit of the child's canonical deletion vertex.  Accepted
 * children are passed to on_child in canonical form, sorted by graph6.
 *
 * If the parent is the canonical parent of every child it should produce, then
 * running this over one representative per class at order n-1 yields exactly
 * one representative per class at order n.
 */
template <typename F>
void for_each_child(const Graph& parent, F&& on_child) {
  const int m = parent.order();
  if (m + 1 > kMaxEnumerationOrder) throw CapacityError("enumeration limited to 12 vertices");
  const auto parent_aut = canonical_search(parent).automorphisms;

  const std::size_t masks = std::size_t{1} << m;
  std::vector<Mask> reps;
  if (parent_aut.generators.empty()) {
    reps.resize(masks);
    for (std::size_t s = 0; s < masks; ++s) reps[s] = s;
  } else {
    std::vector<char> seen(masks, 0);
    std::vector<Mask> stack;
    for (std::size_t s = 0; s < masks; ++s) {
      if (seen[s]) continue;
      reps.push_back(s);
      seen[s] = 1;
      stack.assign(1, s);
      while (!stack.empty()) {
        const Mask t = stack.back();
        stack.pop_back();
        for (const auto& gamma : parent_aut.generators) {
          const Mask u = detail::image(t, gamma);
          if (!seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
        }
      }
    }
  }

  std::vector<std::pair<std::string, Graph>> accepted;
  for (Mask s : reps) {
    Graph child = parent;
    const int v = child.add_vertex(s);
    const auto key = detail::deletion_keys(child);
    int best = key[0];
    for (int x = 1; x <= m; ++x) best = std::max(best, key[x]);
    if (key[v] != best) continue;

    const auto result = canonical_search(child);
    int w = -1;
    for (int x = 0; x <= m; ++x)
      if (key[x] == best && (w < 0 || result.form.perm[x] > result.form.perm[w])) w = x;
    if (result.automorphisms.orbit[v] != result.automorphisms.orbit[w]) continue;
    accepted.emplace_back(encode_graph6(result.form.canon), result.form.canon);
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [text, g] : accepted) on_child(g);
}

/// One representative per isomorphism class on n vertices, in deterministic order.
inline auto enumerate_graphs(int n) -> std::vector<Graph> {
  if (n < 1 || n > kMaxEnumerationOrder) throw std::invalid_argument("enumerate_graphs: n must be in 1..12");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    for (const Graph& p : level) for_each_child(p, [&](const Graph& c) { next.push_back(c); });
    level = std::move(next);
  }
  return level;
}

/// Streams the representatives on n vertices without storing the last level.
template <typename F>
void for_each_graph(int n, F&& f) {
  if (n == 1) {
    f(Graph(1));
    return;
  }
  for (const Graph& p : enumerate_graphs(n - 1)) for_each_child(p, f);
}

/// All classes of order 1..n, smallest first.
inline auto enumerate_graphs_up_to(int n) -> std::vector<Graph> {
  std::vector<Graph> out;
  std::vector<Graph> level{Graph(1)};
  out.push_back(Graph(1));
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    for (const Graph& p : level) for_each_child(p, [&](const Graph& c) { next.push_back(c); });
    level = std::move(next);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace mtlab
