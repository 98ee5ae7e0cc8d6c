#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "canon.hpp"
#include "classes.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "mock_threshold.hpp"

namespace mtlab {

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CensusKind { Cycle, CycleComplement, Sporadic };

inline auto kind_name(CensusKind k) -> std::string {
  switch (k) {
    case CensusKind::Cycle: return "cycle";
    case CensusKind::CycleComplement: return "cycle_complement";
    case CensusKind::Sporadic: return "sporadic";
  }
  return "?";
}

struct CensusRecord {
  std::string graph6;
  int order = 0;
  CensusKind kind = CensusKind::Sporadic;
  bool self_complementary = false;
  bool contraction_minimal = false;
};

struct CensusSummary {
  std::map<int, int> per_order_sporadic;
  std::map<int, int> per_order_total;
  int total_sporadic = 0;
  int total = 0;
  int contraction_minimal_sporadic = 0;
  int self_complementary_total = 0;
  int shard_count = 0;
  double elapsed_seconds = 0;
};

/// Where candidates come from.
enum class CensusMode {
  Pruned,  ///< extend only graphs inside the class; every minimal outsider has such a canonical parent
  Full,    ///< test every graph of every order
};

struct CensusOptions {
  int max_n = 10;
  int workers = 1;
  int k = 1;
  CensusMode mode = CensusMode::Pruned;
  std::size_t shard_size = 64;
  std::filesystem::path checkpoint_dir;  ///< empty disables checkpointing
  long stop_after_shards = -1;           ///< stop once this many shards were computed (simulated kill)
};

/// Minimal graphs found by the engine, sorted by (order, graph6).
struct EngineResult {
  std::vector<std::string> minimal;
  int shard_count = 0;
  bool complete = true;
};

namespace detail {

inline auto fnv1a(const std::string& s) -> std::uint64_t {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct ShardOutput {
  std::vector<std::string> inside;   // children in the class (graph6, canonical)
  std::vector<std::string> minimal;  // minimal outsiders
};

inline auto shard_path(const std::filesystem::path& dir, const std::string& tag, int level, std::size_t index)
    -> std::filesystem::path {
  return dir / (tag + "-n" + std::to_string(level) + "-s" + std::to_string(index) + ".ckpt");
}

inline auto shard_header(const std::string& tag, int level, const Shard& s) -> std::string {
  std::ostringstream h;
  h << "mtlab-shard " << tag << " level=" << level << " first=" << s.first << " last=" << s.last;
  return h.str();
}

inline void write_shard(const std::filesystem::path& path, const std::string& header, const ShardOutput& out) {
  std::string body = header + "\n";
  for (const auto& g : out.inside) body += "c " + g + "\n";
  for (const auto& g : out.minimal) body += "m " + g + "\n";
  std::ostringstream trailer;
  trailer << "end " << out.inside.size() + out.minimal.size() << " " << std::hex << fnv1a(body) << "\n";
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << body << trailer.str();
    if (!f) throw CheckpointError("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline auto read_shard(const std::filesystem::path& path, const std::string& header) -> ShardOutput {
  std::ifstream f(path, std::ios::binary);
  std::string line, body;
  ShardOutput out;
  if (!std::getline(f, line) || line != header) throw CheckpointError("checkpoint header mismatch: " + path.string());
  body = line + "\n";
  bool ended = false;
  while (std::getline(f, line)) {
    if (line.starts_with("end ")) {
      std::istringstream t(line.substr(4));
      std::size_t count = 0;
      std::uint64_t hash = 0;
      t >> count >> std::hex >> hash;
      if (!t || count != out.inside.size() + out.minimal.size() || hash != fnv1a(body))
        throw CheckpointError("checkpoint trailer mismatch: " + path.string());
      ended = true;
      break;
    }
    body += line + "\n";
    if (line.size() < 3 || line[1] != ' ' || (line[0] != 'c' && line[0] != 'm'))
      throw CheckpointError("malformed checkpoint line in " + path.string());
    (line[0] == 'c' ? out.inside : out.minimal).push_back(line.substr(2));
  }
  if (!ended) throw CheckpointError("checkpoint truncated: " + path.string());
  return out;
}

// Runs fn(i) for i in [0, count) on `workers` threads; exceptions are rethrown on the caller.
template <typename F>
void parallel_for(std::size_t count, int workers, F&& fn) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

inline auto all_deletions_inside(const Graph& g, const std::function<bool(const Graph&)>& inside) -> bool {
  for (int v = 0; v < g.order(); ++v)
    if (!inside(delete_vertex(g, v))) return false;
  return true;
}

}  // namespace detail

/**
 * Finds the graphs of order <= max_n that lie outside a hereditary class but
 * whose vertex-deleted subgraphs all lie inside.  `inside` decides class
 * membership; `accept` is an extra filter applied to candidates (for example
 * edge-deletion minimality).  Output does not depend on the worker count.
 */
inline auto run_hereditary_search(const CensusOptions& opt, const std::string& tag,
                                  const std::function<bool(const Graph&)>& inside,
                                  const std::function<bool(const Graph&)>& accept = {}) -> EngineResult {
  if (opt.max_n < 1 || opt.max_n > kMaxEnumerationOrder - 1)
    throw CapacityError("census order must be in 1..11");
  EngineResult result;
  std::vector<std::string> minimal;

  // Order 1.
  const Graph k1(1);
  std::vector<PackedGraph> level;
  if (inside(k1)) level.emplace_back(k1);
  else if (!accept || accept(k1)) minimal.push_back(encode_graph6(k1));

  const bool full = opt.mode == CensusMode::Full;
  if (full) level.assign(1, PackedGraph(k1));
  if (!opt.checkpoint_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(opt.checkpoint_dir, ec);
    if (ec) throw CheckpointError("cannot create checkpoint directory " + opt.checkpoint_dir.string());
  }

  long computed = 0;
  std::mutex count_mutex;
  for (int n = 2; n <= opt.max_n; ++n) {
    const auto shards = plan_shards(level.size(), opt.shard_size);
    result.shard_count += static_cast<int>(shards.size());
    std::vector<detail::ShardOutput> outputs(shards.size());
    std::vector<char> done(shards.size(), 0);
    const bool last = n == opt.max_n;

    detail::parallel_for(shards.size(), opt.workers, [&](std::size_t i) {
      const Shard& s = shards[i];
      const std::string header = detail::shard_header(tag, n, s);
      std::filesystem::path path;
      if (!opt.checkpoint_dir.empty()) {
        path = detail::shard_path(opt.checkpoint_dir, tag, n, i);
        if (std::filesystem::exists(path)) {
          outputs[i] = detail::read_shard(path, header);
          done[i] = 1;
          return;
        }
      }
      {
        std::lock_guard lock(count_mutex);
        if (opt.stop_after_shards >= 0 && computed >= opt.stop_after_shards) return;
        ++computed;
      }
      detail::ShardOutput out;
      for (std::size_t p = s.first; p < s.last; ++p) {
        for_each_child(level[p].unpack(), [&](const Graph& child) {
          const bool in = inside(child);
          if (in || full) {
            if (!last) out.inside.push_back(encode_graph6(child));
            if (in) return;
          }
          if ((!accept || accept(child)) && detail::all_deletions_inside(child, inside))
            out.minimal.push_back(encode_graph6(child));
        });
      }
      if (!path.empty()) detail::write_shard(path, header, out);
      outputs[i] = std::move(out);
      done[i] = 1;
    });

    if (std::find(done.begin(), done.end(), 0) != done.end()) {
      result.complete = false;
      return result;
    }
    std::vector<PackedGraph> next;
    for (auto& out : outputs) {
      for (const auto& g : out.inside) next.emplace_back(decode_graph6(g));
      for (auto& g : out.minimal) minimal.push_back(std::move(g));
    }
    level = std::move(next);
  }

  std::sort(minimal.begin(), minimal.end(), [](const std::string& a, const std::string& b) {
    const int na = decode_graph6(a).order(), nb = decode_graph6(b).order();
    return na != nb ? na < nb : a < b;
  });
  result.minimal = std::move(minimal);
  return result;
}

/// Same search over graphs read from a graph6 stream (one per line, any labelling, duplicates allowed).
inline auto run_hereditary_search_stream(std::istream& in, const std::function<bool(const Graph&)>& inside,
                                         const std::function<bool(const Graph&)>& accept = {})
    -> std::vector<std::string> {
  std::set<std::pair<int, std::string>> found;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || (line.starts_with(">>graph6<<") && line.size() == 10)) continue;
    Graph g(0);
    try {
      g = decode_graph6(line);
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const CapacityError& e) {
      throw CapacityError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (inside(g) || (accept && !accept(g)) || !detail::all_deletions_inside(g, inside)) continue;
    found.emplace(g.order(), canonical_graph6(g));
  }
  std::vector<std::string> out;
  for (auto& [n, s] : found) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------
// Mock threshold census

inline auto is_cycle(const Graph& g) -> bool {
  if (g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

inline auto make_record(const std::string& g6, bool with_contraction) -> CensusRecord {
  const Graph g = decode_graph6(g6);
  CensusRecord r;
  r.graph6 = g6;
  r.order = g.order();
  if (is_cycle(g)) r.kind = CensusKind::Cycle;
  else if (is_cycle(complement(g))) r.kind = CensusKind::CycleComplement;
  r.self_complementary = is_self_complementary(g);
  if (with_contraction) r.contraction_minimal = is_contraction_minimal_forb(g);
  return r;
}

inline auto summarize(const std::vector<CensusRecord>& catalog, int shard_count) -> CensusSummary {
  CensusSummary s;
  s.shard_count = shard_count;
  for (const auto& r : catalog) {
    ++s.total;
    ++s.per_order_total[r.order];
    if (r.self_complementary) ++s.self_complementary_total;
    if (r.kind != CensusKind::Sporadic) continue;
    ++s.per_order_sporadic[r.order];
    ++s.total_sporadic;
    if (r.contraction_minimal) ++s.contraction_minimal_sporadic;
  }
  return s;
}

struct CensusRun {
  CensusSummary summary;
  std::vector<CensusRecord> catalog;
  bool complete = true;
};

/// Degree window every minimal non-member of the k-class satisfies: k+1 <= delta <= Delta <= n-2-k.
inline auto in_degree_window(const Graph& g, int k) -> bool {
  return g.order() > 0 && g.min_degree() >= k + 1 && g.max_degree() <= g.order() - 2 - k;
}

/**
 * Minimal non-(k-)mock-threshold graphs up to opt.max_n vertices.  Candidates
 * are pre-filtered by membership, then by the degree window, then by the
 * vertex-deletion minimality test.
 */
inline auto run_census(const CensusOptions& opt) -> CensusRun {
  const auto start = std::chrono::steady_clock::now();
  const int k = opt.k;
  auto inside = [k](const Graph& g) { return is_mock_threshold(g, k); };
  auto window = [k](const Graph& g) { return in_degree_window(g, k); };
  const std::string tag = "mt-k" + std::to_string(k) + (opt.mode == CensusMode::Full ? "-full" : "");
  auto found = run_hereditary_search(opt, tag, inside, window);

  CensusRun run;
  run.complete = found.complete;
  if (!found.complete) return run;
  std::vector<CensusRecord> records(found.minimal.size());
  detail::parallel_for(records.size(), opt.workers,
                       [&](std::size_t i) { records[i] = make_record(found.minimal[i], k == 1); });
  run.catalog = std::move(records);
  run.summary = summarize(run.catalog, found.shard_count);
  run.summary.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

/// Census over an external graph6 stream instead of the internal enumerator.
inline auto run_census_stream(std::istream& in, int k = 1) -> CensusRun {
  auto inside = [k](const Graph& g) { return is_mock_threshold(g, k); };
  auto window = [k](const Graph& g) { return in_degree_window(g, k); };
  CensusRun run;
  for (const auto& g6 : run_hereditary_search_stream(in, inside, window)) run.catalog.push_back(make_record(g6, k == 1));
  run.summary = summarize(run.catalog, 0);
  return run;
}

/// Catalog file body: one canonical graph6 per line.
inline auto catalog_text(const std::vector<CensusRecord>& catalog) -> std::string {
  std::string out;
  for (const auto& r : catalog) out += r.graph6 + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Butterfly family and catalog checks

/// Skeleton on x1..x4 = 0..3, y1..y4 = 4..7, z1 = z2 = 8, z3 = z4 = 9.
inline auto butterfly_skeleton() -> Graph {
  Graph g(10);
  auto x = [](int i) { return i - 1; };
  auto y = [](int i) { return 3 + i; };
  auto z = [](int i) { return ((i - 1) % 4) < 2 ? 8 : 9; };  // z5 = z1, z6 = z2
  for (int i = 1; i <= 4; ++i) {
    g.add_edge(x(i), y(i));
    g.add_edge(x(i), z(i));
    g.add_edge(y(i), z(i));
    g.add_edge(y(i), z(i + 2));
  }
  g.add_edge(8, 9);
  return g;
}

/// All skeleton + optional y_i y_j edge sets, one per isomorphism class, sorted by graph6.
inline auto butterfly_family() -> std::vector<Graph> {
  const Graph skeleton = butterfly_skeleton();
  std::vector<std::pair<int, int>> optional;
  for (int i = 4; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) optional.emplace_back(i, j);
  std::set<std::string> seen;
  for (unsigned subset = 0; subset < (1U << optional.size()); ++subset) {
    Graph g = skeleton;
    for (std::size_t e = 0; e < optional.size(); ++e)
      if ((subset >> e) & 1U) g.add_edge(optional[e].first, optional[e].second);
    seen.insert(canonical_graph6(g));
  }
  std::vector<Graph> out;
  for (const auto& s : seen) out.push_back(decode_graph6(s));
  return out;
}

struct CatalogViolation {
  std::string graph6;
  std::string check;
};

struct CatalogReport {
  std::vector<CatalogViolation> violations;
  explicit operator bool() const noexcept { return violations.empty(); }
};

/**
 * Structural checks on a minimal non-MT catalog: complement closure, each
 * member non-MT with every vertex deletion MT, the degree window, no three
 * divalent vertices with a common neighbourhood, and at least n/2 vertices of
 * degree 2 or codegree 2.
 */
inline auto verify_catalog(const std::vector<std::string>& catalog) -> CatalogReport {
  CatalogReport report;
  std::set<std::string> members;
  for (const auto& s : catalog) members.insert(canonical_graph6(decode_graph6(s)));
  for (const auto& s : catalog) {
    const Graph g = decode_graph6(s);
    const int n = g.order();
    auto fail = [&](const std::string& what) { report.violations.push_back({s, what}); };
    if (!members.count(canonical_graph6(complement(g)))) fail("complement missing");
    if (!is_minimal_non_mt(g)) fail("not a minimal non-MT graph");
    if (!in_degree_window(g, 1)) fail("degree outside 2..n-3");
    std::map<Mask, int> divalent_by_nbhd;
    int divalent = 0, codivalent = 0;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 2) {
        ++divalent;
        if (++divalent_by_nbhd[g.neighbors(v)] == 3) fail("three divalent vertices share a neighbourhood");
      }
      if (g.codegree(v) == 2) ++codivalent;
    }
    if (2 * (divalent + codivalent) < n) fail("fewer than n/2 divalent and co-divalent vertices");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Split and mock threshold

/// Graphs minimally outside (split and MT), up to max_n <= 9 vertices.  Exploratory.
inline auto split_mt_census(int max_n, int workers = 1) -> std::vector<std::string> {
  if (max_n > 9) throw CapacityError("split_mt_census: limited to 9 vertices");
  CensusOptions opt;
  opt.max_n = max_n;
  opt.workers = workers;
  auto inside = [](const Graph& g) { return is_split(g) && is_mock_threshold(g); };
  return run_hereditary_search(opt, "split-mt", inside).minimal;
}

}  // namespace mtlab
