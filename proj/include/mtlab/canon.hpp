#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bits.hpp"
#include "graph.hpp"
#include "graph6.hpp"

namespace mtlab {

/// Canonical representative of g's isomorphism class and the relabelling that produced it.
struct CanonicalForm {
  Graph canon;
  std::vector<int> perm;  ///< perm[v] is the canonical label of input vertex v
};

/// Automorphism group generators found during the canonical search.
struct Automorphisms {
  std::vector<std::array<std::uint8_t, Graph::kCapacity>> generators;  ///< each maps v -> gen[v]
  std::vector<int> orbit;  ///< orbit[v] = smallest vertex in v's orbit
};

struct CanonicalResult {
  CanonicalForm form;
  Automorphisms automorphisms;
};

namespace detail {

// Ordered partition of the vertex set, one mask per cell.
struct Partition {
  std::array<Mask, Graph::kCapacity> cell{};
  int size = 0;

  auto discrete(int n) const noexcept -> bool { return size == n; }
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  auto run() -> CanonicalResult {
    CanonicalResult out;
    if (n_ == 0) {
      out.form.canon = g_;
      return out;
    }
    Partition root;
    root.cell[0] = g_.vertices();
    root.size = 1;
    refine(root, g_.vertices());
    search(root, 0);

    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[best_lab_[i]] = i;
    out.form.perm = perm;
    out.form.canon = g_.relabeled(perm);
    out.automorphisms.generators = generators_;
    out.automorphisms.orbit = orbits(generators_.size(), 0);
    return out;
  }

 private:
  using Perm = std::array<std::uint8_t, Graph::kCapacity>;
  static constexpr int kNoJump = 1 << 20;

  // Splits cells by neighbour counts into each splitter until the queue drains.
  void refine(Partition& p, Mask first_splitter) const {
    std::array<Mask, 4 * Graph::kCapacity> queue;
    int head = 0, tail = 0;
    queue[tail++] = first_splitter;
    while (head < tail && !p.discrete(n_)) {
      const Mask w = queue[head++];
      for (int ci = 0; ci < p.size; ++ci) {
        const Mask x = p.cell[ci];
        if ((x & (x - 1)) == 0) continue;
        std::array<std::uint8_t, Graph::kCapacity> count;
        bool uniform = true;
        int first = -1;
        for_each_bit(x, [&](int v) {
          count[v] = static_cast<std::uint8_t>(popcount(g_.neighbors(v) & w));
          if (first < 0) first = count[v];
          else if (count[v] != first) uniform = false;
        });
        if (uniform) continue;

        // Fragments ordered by ascending count.
        std::array<Mask, Graph::kCapacity + 1> bucket{};
        Mask used_lo = 0;
        bool used_64 = false;
        for_each_bit(x, [&](int v) {
          bucket[count[v]] |= bit(v);
          if (count[v] == 64) used_64 = true;
          else used_lo |= bit(count[v]);
        });
        std::array<Mask, Graph::kCapacity> frag;
        int m = 0;
        for_each_bit(used_lo, [&](int c) { frag[m++] = bucket[c]; });
        if (used_64) frag[m++] = bucket[64];

        for (int k = p.size - 1; k > ci; --k) p.cell[k + m - 1] = p.cell[k];
        for (int k = 0; k < m; ++k) p.cell[ci + k] = frag[k];
        p.size += m - 1;
        for (int k = 0; k < m && tail < static_cast<int>(queue.size()); ++k) queue[tail++] = frag[k];
        ci += m - 1;
      }
    }
  }

  // Orbits under the generators (first `count` of them) that fix path_[0..depth) pointwise.
  auto orbits(std::size_t count, int depth) const -> std::vector<int> {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::size_t k = 0; k < count; ++k) {
      const Perm& gen = generators_[k];
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = gen[path_[i]] == path_[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gen[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<int> rep(n_);
    for (int v = 0; v < n_; ++v) rep[v] = find(v);
    // union by min keeps each root the orbit minimum
    return rep;
  }

  auto search(const Partition& p, int depth) -> int {
    if (p.discrete(n_)) return leaf(p, depth);

    int target = 0;
    while ((p.cell[target] & (p.cell[target] - 1)) == 0) ++target;
    const Mask cell = p.cell[target];

    Mask tried = 0;
    std::vector<int> orbit;
    std::size_t orbit_gens = static_cast<std::size_t>(-1);
    for (Mask rest = cell; rest; rest &= rest - 1) {
      const int v = lowest_bit(rest);
      if (tried) {
        if (orbit_gens != generators_.size()) {
          orbit = orbits(generators_.size(), depth);
          orbit_gens = generators_.size();
        }
        bool equivalent = false;
        for_each_bit(tried, [&](int u) { equivalent = equivalent || orbit[u] == orbit[v]; });
        if (equivalent) continue;
      }
      tried |= bit(v);

      Partition child = p;
      for (int k = child.size - 1; k > target; --k) child.cell[k + 1] = child.cell[k];
      child.cell[target] = bit(v);
      child.cell[target + 1] = cell & ~bit(v);
      ++child.size;
      refine(child, bit(v));

      path_[depth] = static_cast<std::uint8_t>(v);
      const int jump = search(child, depth + 1);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  auto leaf(const Partition& p, int depth) -> int {
    Perm lab{}, inv{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = static_cast<std::uint8_t>(lowest_bit(p.cell[i]));
      inv[lab[i]] = static_cast<std::uint8_t>(i);
    }
    std::array<Mask, Graph::kCapacity> rows{};
    for (int u = 0; u < n_; ++u) {
      Mask r = 0;
      for_each_bit(g_.neighbors(u), [&](int w) { r |= bit(inv[w]); });
      rows[inv[u]] = r;
    }

    if (!have_first_) {
      have_first_ = true;
      first_rows_ = best_rows_ = rows;
      first_lab_ = best_lab_ = lab;
      first_path_ = best_path_ = path_;
      first_depth_ = best_depth_ = depth;
      return kNoJump;
    }
    if (rows == first_rows_) return record_automorphism(first_lab_, lab, first_path_, depth);
    const int cmp = compare(rows, best_rows_);
    if (cmp == 0) return record_automorphism(best_lab_, lab, best_path_, depth);
    if (cmp < 0) {
      best_rows_ = rows;
      best_lab_ = lab;
      best_path_ = path_;
      best_depth_ = depth;
    }
    return kNoJump;
  }

  auto compare(const std::array<Mask, Graph::kCapacity>& a, const std::array<Mask, Graph::kCapacity>& b) const
      -> int {
    for (int i = 0; i < n_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  // gamma maps from[i] -> to[i]; resume at the node where the two paths diverge.
  auto record_automorphism(const Perm& from, const Perm& to, const Perm& other_path, int depth) -> int {
    Perm gamma{};
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) generators_.push_back(gamma);
    int d = 0;
    while (d < depth && path_[d] == other_path[d]) ++d;
    return d;
  }

  const Graph& g_;
  int n_;
  Perm path_{};
  bool have_first_ = false;
  std::array<Mask, Graph::kCapacity> first_rows_{}, best_rows_{};
  Perm first_lab_{}, best_lab_{}, first_path_{}, best_path_{};
  int first_depth_ = 0, best_depth_ = 0;
  std::vector<Perm> generators_;
};

}  // namespace detail

/// Canonical form together with automorphism generators and vertex orbits.
inline auto canonical_search(const Graph& g) -> CanonicalResult { return detail::CanonicalSearch(g).run(); }

/**
 * Canonical relabelling by partition refinement and backtracking over cell
 * choices; the representative is the leaf with the lexicographically least
 * adjacency rows.
 */
inline auto canonicalize(const Graph& g) -> CanonicalForm { return canonical_search(g).form; }

inline auto canonical_graph(const Graph& g) -> Graph { return canonical_search(g).form.canon; }

inline auto canonical_graph6(const Graph& g) -> std::string { return encode_graph6(canonical_graph(g)); }

inline auto is_isomorphic(const Graph& a, const Graph& b) -> bool {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_graph(a) == canonical_graph(b);
}

inline auto is_self_complementary(const Graph& g) -> bool { return is_isomorphic(g, complement(g)); }

}  // namespace mtlab
