// mtlab command-line front end.  Reads graph6 lines on stdin where a command
// takes graphs; writes one JSON object per input line.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <mtlab/mtlab.hpp>

namespace {

using namespace mtlab;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kCapacity = 3 };

struct ParseFailure {
  std::size_t line;
  std::string message;
  bool capacity;
};

auto default_jobs() -> int {
  if (const char* env = std::getenv("MTLAB_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return j;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

auto trim(std::string s) -> std::string {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

/**
 * Streams graph6 lines through fn in chunks, fn running on up to `jobs`
 * threads; output order follows input order.  Blank lines are skipped.
 */
template <typename F>
auto stream_graphs(std::istream& in, std::ostream& out, int jobs, F fn) -> int {
  constexpr std::size_t kChunk = 512;
  std::size_t line_no = 0;
  std::string line;
  bool eof = false;
  while (!eof) {
    std::vector<Graph> graphs;
    std::optional<ParseFailure> failure;
    while (graphs.size() < kChunk) {
      if (!std::getline(in, line)) {
        eof = true;
        break;
      }
      ++line_no;
      line = trim(line);
      if (line.empty()) continue;
      try {
        graphs.push_back(decode_graph6(line));
      } catch (const CapacityError& e) {
        failure = ParseFailure{line_no, e.what(), true};
        break;
      } catch (const std::exception& e) {
        failure = ParseFailure{line_no, e.what(), false};
        break;
      }
    }
    std::vector<std::string> results(graphs.size());
    detail::parallel_for(graphs.size(), jobs, [&](std::size_t i) { results[i] = fn(graphs[i]); });
    for (const auto& r : results) out << r << '\n';
    out.flush();
    if (failure) {
      std::cerr << "mtlab: line " << failure->line << ": " << failure->message << '\n';
      return failure->capacity ? kCapacity : kParse;
    }
  }
  return kOk;
}

auto parse_int_list(const std::string& s) -> std::vector<int> {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) out.push_back(std::stoi(item));
  return out;
}

/// "r=2,s=3,pendants=1:0:0" into ClawFreeParams.
auto parse_params(const std::string& text) -> ClawFreeParams {
  ClawFreeParams p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("parameter '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "r") p.r = std::stoi(value);
    else if (key == "s") p.s = std::stoi(value);
    else if (key == "p") p.p = std::stoi(value);
    else if (key == "q") p.q = std::stoi(value);
    else if (key == "alpha") p.alpha = std::stoi(value);
    else if (key == "beta") p.beta = std::stoi(value);
    else if (key == "x2_links") p.x2_links = std::stoi(value);
    else if (key == "pendants") p.pendants = parse_int_list(value);
    else if (key == "parent") p.parent = parse_int_list(value);
    else throw std::invalid_argument("unknown parameter '" + key + "'");
  }
  return p;
}

auto open_output(const std::string& path, std::ofstream& file) -> std::ostream& {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  return file;
}

/// Non-blank lines with their 1-based line numbers.
auto read_lines(std::istream& in) -> std::vector<std::pair<std::size_t, std::string>> {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    line = trim(line);
    if (!line.empty()) out.emplace_back(n, line);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mtlab: mock threshold graph laboratory"};
  app.require_subcommand(1);

  int k = 1;
  int max_n = 10;
  int jobs = default_jobs();
  std::string method = "construct";
  std::string type;
  std::string params;
  std::string out_path;
  std::string format;
  std::string checkpoint_dir;
  std::string mode = "pruned";
  std::string census_class = "mt";
  long stop_after = -1;
  bool timing = false;
  bool ingest = false;
  bool search = false;
  int order = 0;
  std::string family_name;

  auto add_jobs = [&](CLI::App* c) {
    c->add_option("-j,--jobs", jobs, "worker threads (default $MTLAB_JOBS or 1)")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "json or g6")->check(CLI::IsMember({"json", "g6"}));
  };

  auto* recognize_cmd = app.add_subcommand("recognize", "MT recognition with certificate or stuck witness");
  recognize_cmd->add_option("-k", k, "relaxation parameter")->check(CLI::NonNegativeNumber);
  add_jobs(recognize_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "class memberships and structural labels");
  add_jobs(classify_cmd);

  auto* clique_cmd = app.add_subcommand("clique", "clique and chromatic number of MT graphs");
  add_jobs(clique_cmd);

  auto* census_cmd = app.add_subcommand("census", "minimal forbidden induced subgraphs");
  census_cmd->add_option("--max-n", max_n, "largest order")->check(CLI::Range(1, kMaxEnumerationOrder));
  census_cmd->add_option("-k", k, "relaxation parameter")->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--mode", mode, "pruned or full")->check(CLI::IsMember({"pruned", "full"}));
  census_cmd->add_option("--class", census_class, "mt or split-mt")->check(CLI::IsMember({"mt", "split-mt"}));
  census_cmd->add_option("--checkpoint-dir", checkpoint_dir, "shard checkpoint directory");
  census_cmd->add_option("--stop-after", stop_after, "stop after this many computed shards");
  census_cmd->add_option("--out", out_path, "write the catalog here");
  census_cmd->add_flag("--timing", timing, "include wall time in the summary");
  census_cmd->add_flag("--ingest", ingest, "read candidate graph6 lines from stdin instead of enumerating");
  add_jobs(census_cmd);
  add_format(census_cmd);

  auto* family_cmd = app.add_subcommand("family", "generate graph families");
  family_cmd->add_option("name", family_name, "butterfly or clawfree")
      ->required()
      ->check(CLI::IsMember({"butterfly", "clawfree"}));
  family_cmd->add_option("--type", type, "claw-free type I..IX");
  family_cmd->add_option("--params", params, "key=value list, lists joined with ':'");
  family_cmd->add_option("--out", out_path, "write here instead of stdout");
  add_format(family_cmd);

  auto* line_cmd = app.add_subcommand("linegraph", "is the line graph mock threshold");
  line_cmd->add_option("--method", method, "construct, forbidden or structure")
      ->check(CLI::IsMember({"construct", "forbidden", "structure"}));
  line_cmd->add_flag("--search", search, "run the forbidden-subgraph search instead of reading graphs");
  line_cmd->add_option("--max-n", max_n, "search bound, also the catalog bound for --method forbidden")
      ->check(CLI::Range(1, kMaxEnumerationOrder));
  add_jobs(line_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "one graph per isomorphism class");
  enumerate_cmd->add_option("--order", order, "exact order")->check(CLI::Range(1, kMaxEnumerationOrder));
  enumerate_cmd->add_option("--max-n", max_n, "all orders 1..max-n")->check(CLI::Range(1, kMaxEnumerationOrder));

  auto* verify_cmd = app.add_subcommand("verify", "check a forbidden-subgraph catalog read from stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (format.empty()) format = family_cmd->parsed() ? "g6" : "json";

  try {
    if (recognize_cmd->parsed())
      return stream_graphs(std::cin, std::cout, jobs, [&](const Graph& g) { return recognition_json(g, k).dump(); });

    if (classify_cmd->parsed())
      return stream_graphs(std::cin, std::cout, jobs, [](const Graph& g) { return classification_json(g).dump(); });

    if (clique_cmd->parsed())
      return stream_graphs(std::cin, std::cout, jobs, [](const Graph& g) { return clique_json(g).dump(); });

    if (census_cmd->parsed()) {
      CensusOptions opt;
      opt.max_n = max_n;
      opt.k = k;
      opt.workers = jobs;
      opt.mode = mode == "full" ? CensusMode::Full : CensusMode::Pruned;
      opt.checkpoint_dir = checkpoint_dir;
      opt.stop_after_shards = stop_after;
      std::ofstream file;
      std::ostream& catalog_out = open_output(out_path, file);

      if (census_class == "split-mt") {
        if (max_n > 9) {
          std::cerr << "mtlab: split-mt census is limited to 9 vertices\n";
          return kCapacity;
        }
        const auto found = split_mt_census(max_n, jobs);
        if (format == "g6" || !out_path.empty())
          for (const auto& s : found) catalog_out << s << '\n';
        if (format == "json")
          std::cout << Json{{"maxN", max_n}, {"class", "split-mt"}, {"total", found.size()}}.dump() << '\n';
        return kOk;
      }

      CensusRun run;
      if (ingest) {
        try {
          run = run_census_stream(std::cin, k);
        } catch (const CapacityError& e) {
          std::cerr << "mtlab: " << e.what() << '\n';
          return kCapacity;
        } catch (const Graph6Error& e) {
          std::cerr << "mtlab: " << e.what() << '\n';
          return kParse;
        }
      } else {
        run = run_census(opt);
      }
      if (!run.complete) {
        std::cerr << "mtlab: census stopped early; rerun with the same --checkpoint-dir to resume\n";
        std::cout << Json{{"maxN", max_n}, {"k", k}, {"flags", {{"complete", false}}}}.dump() << '\n';
        return kOk;
      }
      if (format == "g6") {
        catalog_out << catalog_text(run.catalog);
      } else {
        if (!out_path.empty()) catalog_out << catalog_text(run.catalog);
        std::cout << summary_json(run.summary, opt, run.complete, timing).dump() << '\n';
      }
      return kOk;
    }

    if (family_cmd->parsed()) {
      std::ofstream file;
      std::ostream& os = open_output(out_path, file);
      std::vector<Graph> graphs;
      if (family_name == "butterfly") {
        graphs = butterfly_family();
      } else {
        if (type.empty()) {
          std::cerr << "mtlab: family clawfree needs --type\n";
          return kUsage;
        }
        try {
          const auto t = clawfree_type_from_name(type);
          graphs.push_back(complement(generate_clawfree_type(t, parse_params(params))));
        } catch (const CapacityError& e) {
          std::cerr << "mtlab: " << e.what() << '\n';
          return kCapacity;
        } catch (const std::invalid_argument& e) {
          std::cerr << "mtlab: " << e.what() << '\n';
          return kUsage;
        }
      }
      for (const Graph& g : graphs) {
        if (format == "g6") os << encode_graph6(g) << '\n';
        else os << recognition_json(g, 1).dump() << '\n';
      }
      return kOk;
    }

    if (line_cmd->parsed()) {
      if (search) {
        const auto found = search_line_forbidden(max_n, jobs);
        std::cout << Json{{"maxN", max_n}, {"sporadic", found.sporadic}, {"cycles", found.cycles},
                          {"totalSporadic", found.sporadic.size()}}
                         .dump()
                  << '\n';
        return kOk;
      }
      const LineMethod m = method == "forbidden"   ? LineMethod::Forbidden
                           : method == "structure" ? LineMethod::Structure
                                                   : LineMethod::Construct;
      std::vector<Graph> catalog;
      if (m == LineMethod::Forbidden) catalog = decode_catalog(search_line_forbidden(max_n, jobs).sporadic);
      return stream_graphs(std::cin, std::cout, jobs,
                           [&](const Graph& g) { return linegraph_json(g, m, &catalog).dump(); });
    }

    if (enumerate_cmd->parsed()) {
      std::string buffer;
      auto emit = [&](const Graph& g) { buffer += encode_graph6(g) + '\n'; };
      if (order > 0) {
        for_each_graph(order, emit);
      } else {
        for (const Graph& g : enumerate_graphs_up_to(max_n)) emit(g);
      }
      std::cout << buffer;
      return kOk;
    }

    if (verify_cmd->parsed()) {
      std::vector<std::string> catalog;
      for (const auto& [n, text] : read_lines(std::cin)) {
        try {
          (void)decode_graph6(text);
        } catch (const CapacityError& e) {
          std::cerr << "mtlab: line " << n << ": " << e.what() << '\n';
          return kCapacity;
        } catch (const std::exception& e) {
          std::cerr << "mtlab: line " << n << ": " << e.what() << '\n';
          return kParse;
        }
        catalog.push_back(text);
      }
      std::cout << to_json(verify_catalog(catalog)).dump() << '\n';
      return kOk;
    }
  } catch (const CheckpointError& e) {
    std::cerr << "mtlab: checkpoint: " << e.what() << '\n';
    return kParse;
  } catch (const CapacityError& e) {
    std::cerr << "mtlab: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    std::cerr << "mtlab: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
