#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "graph.hpp"

namespace mtlab {

enum class Containment { Subgraph, Induced };

namespace detail {

class Embedder {
 public:
  Embedder(const Graph& host, const Graph& pattern, Containment mode)
      : host_(host), pat_(pattern), induced_(mode == Containment::Induced) {
    // Map high-degree pattern vertices first, preferring ones adjacent to already placed vertices.
    const int k = pat_.order();
    Mask placed = 0;
    for (int i = 0; i < k; ++i) {
      int pick = -1;
      for (int v = 0; v < k; ++v) {
        if (placed & bit(v)) continue;
        auto score = [&](int x) { return std::pair{popcount(pat_.neighbors(x) & placed), pat_.degree(x)}; };
        if (pick < 0 || score(v) > score(pick)) pick = v;
      }
      order_[i] = pick;
      placed |= bit(pick);
    }
  }

  auto run() -> bool { return extend(0, 0); }

 private:
  auto extend(int i, Mask used) -> bool {
    const int k = pat_.order();
    if (i == k) return true;
    const int p = order_[i];
    Mask cand = host_.vertices() & ~used;
    for (int j = 0; j < i; ++j) {
      const int q = order_[j];
      if (pat_.adjacent(p, q)) cand &= host_.neighbors(image_[q]);
      else if (induced_) cand &= ~host_.neighbors(image_[q]);
    }
    const int need = pat_.degree(p);
    const int need_co = pat_.codegree(p);
    for (Mask c = cand; c; c &= c - 1) {
      const int h = lowest_bit(c);
      if (host_.degree(h) < need) continue;
      if (induced_ && host_.codegree(h) < need_co) continue;
      image_[p] = h;
      if (extend(i + 1, used | bit(h))) return true;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pat_;
  bool induced_;
  std::array<int, Graph::kCapacity> order_{};
  std::array<int, Graph::kCapacity> image_{};
};

}  // namespace detail

/// True iff pattern embeds injectively into host preserving edges (and non-edges in Induced mode).
inline auto contains(const Graph& host, const Graph& pattern, Containment mode) -> bool {
  if (pattern.order() > host.order()) return false;
  if (pattern.edge_count() > host.edge_count()) return false;
  if (mode == Containment::Induced) {
    const int pn = pattern.order(), hn = host.order();
    const int pat_non = pn * (pn - 1) / 2 - pattern.edge_count();
    if (pat_non > hn * (hn - 1) / 2 - host.edge_count()) return false;
  }
  // Degree-sequence domination: the i-th largest pattern degree needs a host vertex at least as large.
  const auto pd = pattern.degree_sequence();
  const auto hd = host.degree_sequence();
  for (std::size_t i = 0; i < pd.size(); ++i)
    if (pd[i] > hd[i]) return false;
  return detail::Embedder(host, pattern, mode).run();
}

inline auto contains_induced(const Graph& host, const Graph& pattern) -> bool {
  return contains(host, pattern, Containment::Induced);
}

inline auto contains_subgraph(const Graph& host, const Graph& pattern) -> bool {
  return contains(host, pattern, Containment::Subgraph);
}

}  // namespace mtlab
