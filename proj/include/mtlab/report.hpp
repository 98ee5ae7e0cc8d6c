#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "census.hpp"
#include "classes.hpp"
#include "clawfree.hpp"
#include "graph6.hpp"
#include "line_graphs.hpp"
#include "mock_threshold.hpp"

namespace mtlab {

using Json = nlohmann::ordered_json;

inline auto to_json(const MTOrder& cert) -> Json {
  Json classes = Json::array();
  for (auto c : cert.classes) classes.push_back(std::string(1, class_code(c)));
  return Json{{"order", cert.order}, {"classes", classes}, {"k", cert.k}};
}

/// Inverse of to_json(MTOrder); throws nlohmann exceptions or std::invalid_argument on bad input.
inline auto certificate_from_json(const Json& j) -> MTOrder {
  MTOrder cert;
  cert.order = j.at("order").get<std::vector<int>>();
  for (const auto& s : j.at("classes")) {
    const auto code = s.get<std::string>();
    if (code.size() != 1) throw std::invalid_argument("certificate class code must be one character");
    cert.classes.push_back(class_from_code(code[0]));
  }
  cert.k = j.value("k", 1);
  return cert;
}

inline auto recognition_json(const Graph& g, int k) -> Json {
  const auto r = recognize(g, k);
  Json out{{"graph6", encode_graph6(g)}, {"k", k}, {"mock_threshold", static_cast<bool>(r)}};
  if (r) {
    out["certificate"] = to_json(*r.certificate);
  } else {
    std::vector<int> stuck;
    for_each_bit(r.stuck, [&](int v) { stuck.push_back(v); });
    out["witness"] = {{"vertices", stuck}, {"graph6", encode_graph6(r.witness)}};
  }
  return out;
}

inline auto to_json(const ClawFreeParams& p) -> Json {
  return Json{{"r", p.r},         {"s", p.s},         {"p", p.p},
              {"q", p.q},         {"alpha", p.alpha}, {"beta", p.beta},
              {"x2_links", p.x2_links}, {"pendants", p.pendants}, {"parent", p.parent}};
}

inline auto to_json(const ClawFreeMTLabel& l) -> Json {
  static const char* kinds[] = {"linear_forest", "structured", "not_in_class"};
  Json out{{"label", kinds[static_cast<int>(l.kind)]}};
  out["type"] = l.type ? Json(type_name(*l.type)) : Json(nullptr);
  out["params"] = l.type ? to_json(l.params) : Json(nullptr);
  if (!l.hanging_paths.empty()) out["hanging_paths"] = l.hanging_paths;
  if (!l.reason.empty()) out["reason"] = l.reason;
  return out;
}

inline auto to_json(const BipartiteMTShape& b) -> Json {
  static const char* kinds[] = {"forest", "k2s_with_trees", "not_bipartite_mt"};
  Json out{{"label", kinds[static_cast<int>(b.kind)]}};
  if (b.kind == BipartiteMTShape::Kind::K2sWithTrees) {
    out["s"] = b.s;
    out["trees"] = b.trees;
  }
  return out;
}

/// Classification report: class memberships plus the structural labels where they apply.
inline auto classification_json(const Graph& g) -> Json {
  Json classes = Json::array();
  if (is_mock_threshold(g)) classes.push_back("mock_threshold");
  for (auto c : classify(g).labels()) classes.push_back(label_name(c));
  Json out{{"graph6", encode_graph6(g)}, {"classes", classes}};
  out["clawfree_mt"] = is_claw_free(g) ? to_json(classify_clawfree_mt(g)) : Json(nullptr);
  out["bipartite_mt"] = is_bipartite(g) ? to_json(classify_bipartite_mt(g)) : Json(nullptr);
  return out;
}

inline auto clique_json(const Graph& g) -> Json {
  const auto r = recognize(g);
  Json out{{"graph6", encode_graph6(g)}, {"mock_threshold", static_cast<bool>(r)}};
  if (r) {
    const int w = clique_number(g, *r.certificate);
    out["clique_number"] = w;
    out["chromatic_number"] = w;
  } else {
    out["clique_number"] = nullptr;
    out["chromatic_number"] = nullptr;
  }
  return out;
}

inline auto linegraph_json(const Graph& g, LineMethod method, const std::vector<Graph>* catalog) -> Json {
  static const char* names[] = {"construct", "forbidden", "structure"};
  Json out{{"graph6", encode_graph6(g)}, {"method", names[static_cast<int>(method)]}};
  out["line_graph_mt"] = mt_line_check(g, method, catalog);
  const auto rt = root_type(g);
  out["root_type"] = root_kind_name(rt.kind);
  return out;
}

/// Census summary; wall time only when asked for, so default output is reproducible byte for byte.
inline auto summary_json(const CensusSummary& s, const CensusOptions& opt, bool complete, bool timing) -> Json {
  Json per_sporadic = Json::object(), per_total = Json::object();
  for (auto [n, c] : s.per_order_sporadic) per_sporadic[std::to_string(n)] = c;
  for (auto [n, c] : s.per_order_total) per_total[std::to_string(n)] = c;
  Json out{{"maxN", opt.max_n},
           {"k", opt.k},
           {"perOrderSporadic", per_sporadic},
           {"perOrderTotal", per_total},
           {"totalSporadic", s.total_sporadic},
           {"total", s.total},
           {"contractionMinimal", opt.k == 1 ? Json(s.contraction_minimal_sporadic) : Json(nullptr)},
           {"selfComplementary", s.self_complementary_total},
           {"flags", {{"mode", opt.mode == CensusMode::Full ? "full" : "pruned"}, {"complete", complete}}}};
  if (timing) out["elapsedSeconds"] = s.elapsed_seconds;
  return out;
}

inline auto to_json(const CatalogReport& r) -> Json {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"graph6", x.graph6}, {"check", x.check}});
  return Json{{"ok", r.violations.empty()}, {"violations", v}};
}

}  // namespace mtlab
