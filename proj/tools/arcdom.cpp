// Command-line front end: arc-graph construction, domination certificates,
// preimage recognition, and batch bound-verification campaigns.
//
// Exit codes: 0 success, 1 negative result (no preimage / bound violations),
// 2 input or precondition error, 3 resource limit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcdom/constructions.hpp"
#include "arcdom/domination.hpp"
#include "arcdom/enumerate.hpp"
#include "arcdom/generators.hpp"
#include "arcdom/recognition.hpp"
#include "arcdom/report.hpp"
#include "arcdom/serialize.hpp"
#include "arcdom/threearc.hpp"

namespace {

using namespace arcdom;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    return line.find(' ', first) != std::string::npos ||
           line.find('\t', first) != std::string::npos;
  }
  return true;  // empty input reads as the empty edge list
}

Graph load_graph(const std::string& path) {
  std::string text = read_input(path);
  if (path.size() > 3 && path.substr(path.size() - 3) == ".g6")
    return from_graph6(text);
  if (looks_like_edge_list(text)) return from_edge_list_with_directives(text);
  return from_graph6(text);
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << content;
}

std::vector<ThreeArc> load_walks(const std::string& path) {
  std::string text = read_input(path);
  std::vector<ThreeArc> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    ThreeArc t;
    if (!(ls >> t.v)) continue;
    if (!(ls >> t.u >> t.x >> t.y))
      throw Error(ErrorKind::Parse,
                  "line " + std::to_string(line_no) + ": expected four vertex ids");
    out.push_back(t);
  }
  return out;
}

VertexSet parse_target(const Graph& g, const std::string& spec) {
  if (spec == "all") return vi_set(g, 0);
  if (spec.rfind("vi:", 0) == 0) {
    int i = std::stoi(spec.substr(3));
    return vi_set(g, i);
  }
  throw Error(ErrorKind::Parse, "bad target '" + spec + "' (use all or vi:<i>)");
}

std::vector<int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) return {std::stoi(s)};
  int lo = std::stoi(s.substr(0, dots));
  int hi = std::stoi(s.substr(dots + 2));
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

void expand_family(const std::string& spec, std::uint64_t seed,
                   std::vector<std::pair<std::string, Graph>>& corpus) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (name == "friendship" || name == "cycle" || name == "complete" || name == "path") {
    for (int k : parse_range(rest)) {
      std::string id = name + ":" + std::to_string(k);
      corpus.emplace_back(id, generate(id));
    }
    return;
  }
  if (name == "connected") {
    auto comma = rest.find(',');
    int max_n = std::stoi(rest.substr(0, comma));
    int min_delta = comma == std::string::npos ? 0 : std::stoi(rest.substr(comma + 1));
    int idx = 0;
    for (Graph& g : connected_min_degree_corpus(max_n, min_delta)) {
      corpus.emplace_back("connected:" + std::to_string(g.n()) + ":" + std::to_string(idx++),
                          std::move(g));
    }
    return;
  }
  if (name == "line-random") {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw Error(ErrorKind::Parse, "line-random needs count,max-n");
    int count = std::stoi(rest.substr(0, comma));
    int max_n = std::stoi(rest.substr(comma + 1));
    for (int i = 0; i < count; ++i) {
      std::uint64_t s = seed + static_cast<std::uint64_t>(i);
      int n = 4 + static_cast<int>(s % static_cast<std::uint64_t>(std::max(1, max_n - 3)));
      Graph base = random_min_degree(n, 2, s);
      corpus.emplace_back(
          "line-random:seed=" + std::to_string(s) + ":" + std::to_string(i),
          line_graph(base));
    }
    return;
  }
  // anything else is a single generator spec
  corpus.emplace_back(spec, generate(spec));
}

int cmd_build(const std::string& in, const std::string& out, const std::string& labels,
              bool directed, bool g6_out, int iterate, const std::string& delta_file) {
  LabeledGraph result;
  if (directed) {
    if (iterate > 1 || !delta_file.empty())
      throw Error(ErrorKind::Validation,
                  "--iterate and --delta-file apply to undirected inputs only");
    DiGraph d = digraph_from_edge_list(read_input(in));
    result = three_arc_graph(d);
  } else {
    Graph g = load_graph(in);
    if (!delta_file.empty()) {
      if (iterate > 1)
        throw Error(ErrorKind::Validation, "--iterate cannot be combined with --delta-file");
      result = three_arc_graph(g, load_walks(delta_file));
    } else {
      result = iterate_three_arc_graph(g, iterate);
    }
  }
  write_output(out, g6_out ? to_graph6(result.graph) + "\n"
                           : to_edge_list_with_header(result.graph));
  if (!labels.empty()) write_output(labels, label_table(result));
  return 0;
}

int cmd_dominate(const std::string& in, const std::string& method,
                 const std::string& target_spec, int cap) {
  Graph g = load_graph(in);
  if (method == "exact" || method == "greedy") {
    VertexSet target = parse_target(g, target_spec);
    DominationCertificate cert =
        method == "exact" ? gamma_exact(g, target) : greedy_dominating(g, target);
    if (!arcdom::verify_certificate(g, cert))
      throw Error(ErrorKind::Internal, "emitted certificate fails verification");
    std::cout << to_json(cert) << '\n';
    return 0;
  }
  if (target_spec != "all")
    throw Error(ErrorKind::Validation, "--target applies to exact and greedy only");
  ArcDominationPlan plan;
  if (method == "thm3")
    plan = general_construct(g, cap);
  else if (method == "thm4")
    plan = delta3_construct(g, cap);
  else if (method == "clawfree")
    plan = clawfree_construct(g);
  else
    throw Error(ErrorKind::Parse, "unknown method '" + method + "'");
  if (!plan.verified) throw Error(ErrorKind::Internal, "emitted plan fails verification");
  std::cout << to_json(plan) << '\n';
  return 0;
}

int cmd_recognize(const std::string& in, int budget, bool list_all) {
  Graph g = load_graph(in);
  RecognitionLimits limits;
  limits.max_order = budget;
  limits.list_all = list_all;
  auto result = recognize_small(g, limits);
  if (!result.preimage) {
    std::cout << "{\"result\": \"absent\"}\n";
    return 1;
  }
  nlohmann::ordered_json j;
  j["h"]["n"] = result.preimage->n();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : result.preimage->edges()) edges.push_back({u, v});
  j["h"]["edges"] = edges;
  j["h"]["graph6"] = to_graph6(*result.preimage);
  j["certificate"] =
      nlohmann::ordered_json::parse(to_json(*result.certificate));
  if (list_all) j["preimages"] = result.all_preimages.size();
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_bench(const std::vector<std::string>& families, const std::string& corpus_dir,
              const std::string& out_csv, std::uint64_t seed, int jobs, int cap) {
  std::vector<std::pair<std::string, Graph>> corpus;
  for (const auto& f : families) expand_family(f, seed, corpus);
  if (!corpus_dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
      auto ext = entry.path().extension();
      if (ext == ".el" || ext == ".g6") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) corpus.emplace_back(f.filename().string(), load_graph(f));
  }
  if (corpus.empty()) throw Error(ErrorKind::Validation, "empty corpus");

  AnalyzeOptions options;
  options.gamma_set_cap = cap;
  auto result = run_bench(corpus, jobs, options);

  std::ostringstream csv;
  csv << csv_header() << '\n';
  for (const auto& row : result.rows) csv << csv_row(row) << '\n';
  write_output(out_csv, csv.str());
  std::cout << summary_json(result, seed) << '\n';
  return result.summary.violations > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-arc graph toolkit: construction, domination bounds, recognition"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "construct the 3-arc graph of a graph");
  std::string b_in, b_out = "-", b_labels, b_delta;
  bool b_directed = false, b_g6 = false;
  int b_iterate = 1;
  build->add_option("--in", b_in, "input graph (edge list or graph6; - for stdin)")
      ->required();
  build->add_option("--out", b_out, "output path (- for stdout)");
  build->add_option("--labels", b_labels, "write the arc label sidecar here");
  build->add_flag("--directed", b_directed, "treat input lines as arcs of a digraph");
  build->add_flag("--g6", b_g6, "emit graph6 instead of an edge list");
  build->add_option("--iterate", b_iterate, "apply the operation this many times")
      ->check(CLI::PositiveNumber);
  build->add_option("--delta-file", b_delta, "restrict to the self-paired walks listed here");

  auto* dominate = app.add_subcommand("dominate", "compute a dominating-set certificate");
  std::string d_in, d_method = "exact", d_target = "all";
  int d_cap = 10000;
  dominate->add_option("--in", d_in)->required();
  dominate->add_option("--method", d_method, "exact|greedy|thm3|thm4|clawfree");
  dominate->add_option("--target", d_target, "all or vi:<i> (exact/greedy only)");
  dominate->add_option("--cap", d_cap, "gamma-set enumeration cap");

  auto* recognize = app.add_subcommand("recognize", "search for a 3-arc preimage");
  std::string r_in;
  int r_budget = 12;
  bool r_all = false;
  recognize->add_option("--in", r_in)->required();
  recognize->add_option("--budget", r_budget, "largest input order searched");
  recognize->add_flag("--all", r_all, "count all non-isomorphic preimages");

  auto* bench = app.add_subcommand("bench", "batch verification campaign with a CSV report");
  std::vector<std::string> n_families;
  std::string n_corpus, n_out = "-";
  std::uint64_t n_seed = 1;
  int n_jobs = 1, n_cap = 10000;
  bench->add_option("--family", n_families,
                    "family spec, e.g. friendship:1..4 | connected:7,2 | line-random:50,7");
  bench->add_option("--corpus", n_corpus, "directory of .el/.g6 files");
  bench->add_option("--out", n_out, "CSV path (- for stdout)");
  bench->add_option("--seed", n_seed, "seed recorded in ids and the summary");
  bench->add_option("--jobs", n_jobs, "worker pool size")->check(CLI::PositiveNumber);
  bench->add_option("--cap", n_cap, "gamma-set enumeration cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed())
      return cmd_build(b_in, b_out, b_labels, b_directed, b_g6, b_iterate, b_delta);
    if (dominate->parsed()) return cmd_dominate(d_in, d_method, d_target, d_cap);
    if (recognize->parsed()) return cmd_recognize(r_in, r_budget, r_all);
    if (bench->parsed()) return cmd_bench(n_families, n_corpus, n_out, n_seed, n_jobs, n_cap);
  } catch (const Error& e) {
    std::cout << error_json(e) << '\n';
    return e.kind() == ErrorKind::ResourceLimit ? 3 : 2;
  } catch (const std::exception& e) {
    std::cout << "{\"error\": {\"kind\": \"internal\", \"message\": \"" << e.what()
              << "\"}}\n";
    return 2;
  }
  return 0;
}
