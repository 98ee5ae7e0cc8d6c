#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace mtlab {

/**
 * Role of a vertex at position i (1-based) of an elimination ordering, by its
 * back-degree d in the prefix v_1..v_i.
 *
 * Dominating d = i-1, NearDominating d = i-2, Pendant d = 1, Isolated d = 0.
 * Sparse (2 <= d <= k) and Dense (d >= i-1-k) only occur when k >= 2.
 */
enum class VertexClass { Isolated, Pendant, NearDominating, Dominating, Sparse, Dense };

inline auto class_code(VertexClass c) -> char {
  switch (c) {
    case VertexClass::Isolated: return 'I';
    case VertexClass::Pendant: return 'P';
    case VertexClass::NearDominating: return 'N';
    case VertexClass::Dominating: return 'D';
    case VertexClass::Sparse: return 'S';
    case VertexClass::Dense: return 'C';
  }
  return '?';
}

inline auto class_from_code(char c) -> VertexClass {
  switch (c) {
    case 'I': return VertexClass::Isolated;
    case 'P': return VertexClass::Pendant;
    case 'N': return VertexClass::NearDominating;
    case 'D': return VertexClass::Dominating;
    case 'S': return VertexClass::Sparse;
    case 'C': return VertexClass::Dense;
    default: throw std::invalid_argument(std::string("unknown vertex class code '") + c + "'");
  }
}

/// Tag for back-degree d at 1-based position i; ties resolved Dominating > NearDominating > Pendant > Isolated.
inline auto classify_position(int d, int i, int k = 1) -> std::optional<VertexClass> {
  if (d == i - 1) return VertexClass::Dominating;
  if (d == i - 2) return VertexClass::NearDominating;
  if (d == 1) return VertexClass::Pendant;
  if (d == 0) return VertexClass::Isolated;
  if (d <= k) return VertexClass::Sparse;
  if (d >= i - 1 - k) return VertexClass::Dense;
  return std::nullopt;
}

/// Whether tag c is consistent with back-degree d at position i under parameter k.
inline auto class_matches(VertexClass c, int d, int i, int k) -> bool {
  switch (c) {
    case VertexClass::Dominating: return d == i - 1;
    case VertexClass::NearDominating: return d == i - 2;
    case VertexClass::Pendant: return d == 1;
    case VertexClass::Isolated: return d == 0;
    case VertexClass::Sparse: return d >= 2 && d <= k;
    case VertexClass::Dense: return d >= i - 1 - k && d <= i - 3;
  }
  return false;
}

/// Certificate ordering v_1..v_n with one tag per position.
struct MTOrder {
  std::vector<int> order;
  std::vector<VertexClass> classes;
  int k = 1;

  friend auto operator==(const MTOrder&, const MTOrder&) -> bool = default;
};

struct Recognition {
  std::optional<MTOrder> certificate;  ///< engaged iff the graph is k-mock threshold
  Mask stuck = 0;                      ///< vertices left when greedy elimination got stuck
  Graph witness;                       ///< subgraph induced on stuck

  explicit operator bool() const noexcept { return certificate.has_value(); }
};

/// A vertex is removable within alive when it has at most k neighbours or at most k non-neighbours there.
inline auto is_removable(const Graph& g, int v, Mask alive, int k = 1) -> bool {
  const int d = g.degree_in(v, alive);
  return d <= k || popcount(alive) - 1 - d <= k;
}

/// Greedy membership test on the subgraph induced by alive.
inline auto is_k_mock_threshold_on(const Graph& g, Mask alive, int k) -> bool {
  while (alive) {
    const int m = popcount(alive);
    if (m <= k + 2) return true;  // every vertex has <= k neighbours or <= k non-neighbours
    Mask removable = 0;
    for_each_bit(alive, [&](int v) {
      const int d = popcount(g.neighbors(v) & alive);
      if (d <= k || m - 1 - d <= k) removable |= bit(v);
    });
    if (!removable) return false;
    // Removing every currently removable vertex at once is safe: removability is
    // preserved under deleting other vertices.
    alive &= ~removable;
  }
  return true;
}

inline auto is_mock_threshold(const Graph& g, int k = 1) -> bool {
  return is_k_mock_threshold_on(g, g.vertices(), k);
}

namespace detail {

template <typename Choose>
auto recognize_with(const Graph& g, int k, Choose&& choose) -> Recognition {
  if (k < 0) throw std::invalid_argument("recognize: k must be non-negative");
  Recognition out;
  Mask alive = g.vertices();
  std::vector<int> removed;
  std::vector<int> back_degree;
  while (alive) {
    Mask removable = 0;
    for_each_bit(alive, [&](int v) {
      if (is_removable(g, v, alive, k)) removable |= bit(v);
    });
    if (!removable) {
      out.stuck = alive;
      out.witness = induced_subgraph(g, alive);
      return out;
    }
    const int v = choose(removable);
    back_degree.push_back(g.degree_in(v, alive));
    removed.push_back(v);
    alive &= ~bit(v);
  }
  MTOrder cert;
  cert.k = k;
  const int n = g.order();
  for (int i = 1; i <= n; ++i) {
    const int idx = n - i;
    cert.order.push_back(removed[idx]);
    cert.classes.push_back(*classify_position(back_degree[idx], i, k));
  }
  out.certificate = std::move(cert);
  return out;
}

}  // namespace detail

/**
 * Greedy recognition: repeatedly delete the lowest-index removable vertex.
 * The certificate is the reverse of the deletion sequence.  On failure the
 * remaining vertices all have more than k neighbours and more than k
 * non-neighbours.
 */
inline auto recognize(const Graph& g, int k = 1) -> Recognition {
  return detail::recognize_with(g, k, [](Mask removable) { return lowest_bit(removable); });
}

/// Same as recognize() but breaks ties uniformly at random.
template <typename Rng>
auto recognize_randomized(const Graph& g, int k, Rng& rng) -> Recognition {
  return detail::recognize_with(g, k, [&](Mask removable) {
    std::uniform_int_distribution<int> pick(0, popcount(removable) - 1);
    int skip = pick(rng);
    while (skip-- > 0) removable &= removable - 1;
    return lowest_bit(removable);
  });
}

/// Checks the back-degree condition at every position and that each tag matches its back-degree.
inline auto verify_order(const Graph& g, const MTOrder& cert) -> bool {
  const int n = g.order();
  if (static_cast<int>(cert.order.size()) != n || cert.classes.size() != cert.order.size() || cert.k < 0)
    return false;
  Mask prefix = 0;
  for (int i = 1; i <= n; ++i) {
    const int v = cert.order[i - 1];
    if (v < 0 || v >= n || (prefix & bit(v))) return false;
    const int d = g.degree_in(v, prefix);
    prefix |= bit(v);
    if (d > cert.k && d < i - 1 - cert.k) return false;
    if (!class_matches(cert.classes[i - 1], d, i, cert.k)) return false;
  }
  return true;
}

namespace detail {

// Back-scan over a k = 1 certificate.  With floors, a pendant or isolated
// vertex also records the clique it closes off (itself plus a live earlier
// neighbour) before being deleted; without, it is just deleted.
inline auto clique_scan(const Graph& g, const MTOrder& cert, bool floors) -> int {
  if (cert.k != 1 || !verify_order(g, cert)) throw std::invalid_argument("clique_number: invalid certificate");
  const int n = g.order();
  std::vector<VertexClass> tag(n);
  std::vector<Mask> before(n);  // before[i-1] = {v_1..v_{i-1}}
  Mask prefix = 0;
  for (int i = 1; i <= n; ++i) {
    const int v = cert.order[i - 1];
    before[i - 1] = prefix;
    tag[i - 1] = *classify_position(g.degree_in(v, prefix), i, 1);
    prefix |= bit(v);
  }
  Mask alive = g.vertices();
  int count = 0, best = 0;
  for (int i = n; i >= 1; --i) {
    const int v = cert.order[i - 1];
    if (!(alive & bit(v))) continue;
    alive &= ~bit(v);
    if (tag[i - 1] == VertexClass::Dominating || tag[i - 1] == VertexClass::NearDominating) {
      alive &= ~(alive & ~g.neighbors(v) & before[i - 1]);
      ++count;
    } else if (floors) {
      best = std::max(best, count + 1 + (g.neighbors(v) & alive & before[i - 1] ? 1 : 0));
    }
  }
  return std::max(count, best);
}

}  // namespace detail

/**
 * Clique number (equal to the chromatic number) from a k = 1 certificate.
 *
 * Scans from the last position.  A dominating or near-dominating vertex is
 * deleted together with its earlier non-neighbour and adds one to the count.
 * A pendant or isolated vertex is deleted, but first the clique it forms with
 * its live earlier neighbour (if any) is kept as a lower bound: on 3K2 the
 * pendant edges are the only K2s, and dropping them gives 1.  Tags are
 * re-derived from back-degrees with the Dominating > NearDominating > Pendant
 * > Isolated precedence.
 */
inline auto clique_number(const Graph& g, const MTOrder& cert) -> int {
  return detail::clique_scan(g, cert, true);
}

/// The scan with pendant and isolated vertices simply deleted; undercounts on some graphs.
inline auto clique_number_literal(const Graph& g, const MTOrder& cert) -> int {
  return detail::clique_scan(g, cert, false);
}

inline auto chromatic_number(const Graph& g, const MTOrder& cert) -> int { return clique_number(g, cert); }

/// Not mock threshold, but every vertex-deleted subgraph is.
inline auto is_minimal_non_mt(const Graph& g, int k = 1) -> bool {
  const Mask all = g.vertices();
  if (is_k_mock_threshold_on(g, all, k)) return false;
  bool minimal = true;
  for_each_bit(all, [&](int v) { minimal = minimal && is_k_mock_threshold_on(g, all & ~bit(v), k); });
  return minimal;
}

/// For a minimal non-MT graph: whether every single-edge contraction is mock threshold.
inline auto is_contraction_minimal_forb(const Graph& g) -> bool {
  if (!is_minimal_non_mt(g)) throw std::invalid_argument("is_contraction_minimal_forb: not a minimal non-MT graph");
  for (auto [u, v] : g.edges())
    if (!is_mock_threshold(contract_edge(g, u, v))) return false;
  return true;
}

enum class EmbeddingVariant {
  Mutual,       ///< each new x_i is adjacent to every other vertex except its partner w_i
  Independent,  ///< each new x_i is adjacent to V(g) minus w_i and to no other new vertex
};

/// Adds one vertex per odd-degree vertex of g, in increasing order of the odd vertices.
inline auto even_embedding(const Graph& g, EmbeddingVariant variant) -> Graph {
  std::vector<int> odd;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) % 2 == 1) odd.push_back(v);
  if (g.order() + static_cast<int>(odd.size()) > Graph::kCapacity)
    throw CapacityError("even_embedding exceeds capacity 64");
  Graph h = g;
  const Mask original = g.vertices();
  std::vector<int> added;
  for (int w : odd) added.push_back(h.add_vertex(original & ~bit(w)));
  if (variant == EmbeddingVariant::Mutual)
    for (std::size_t a = 0; a < added.size(); ++a)
      for (std::size_t b = a + 1; b < added.size(); ++b) h.add_edge(added[a], added[b]);
  return h;
}

}  // namespace mtlab

namespace mtlab {

/// Builds a certificate for the given vertex order, or nullopt if some position violates the k condition.
inline auto make_certificate(const Graph& g, const std::vector<int>& order, int k = 1) -> std::optional<MTOrder> {
  MTOrder cert;
  cert.k = k;
  cert.order = order;
  Mask prefix = 0;
  for (int i = 1; i <= static_cast<int>(order.size()); ++i) {
    const int v = order[i - 1];
    if (v < 0 || v >= g.order() || (prefix & bit(v))) return std::nullopt;
    const auto c = classify_position(g.degree_in(v, prefix), i, k);
    if (!c) return std::nullopt;
    cert.classes.push_back(*c);
    prefix |= bit(v);
  }
  if (static_cast<int>(order.size()) != g.order()) return std::nullopt;
  return cert;
}

}  // namespace mtlab
