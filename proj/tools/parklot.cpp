// Command-line front end for the parklot library.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "parklot/counting.hpp"
#include "parklot/digraph.hpp"
#include "parklot/error.hpp"
#include "parklot/flip.hpp"
#include "parklot/formulas.hpp"
#include "parklot/graph_io.hpp"
#include "parklot/parking.hpp"
#include "parklot/verify.hpp"

using namespace parklot;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerdictFail = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  std::string format = "table";
  bool no_timing = false;
  unsigned threads = 0;
  std::uint64_t budget = CountOptions{}.budget;

  CountOptions count_options() const { return {budget, threads}; }
  ReportFormat report_format() const { return parse_report_format(format); }
};

std::vector<long> parse_numbers(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidArgument("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Edge> parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw InvalidArgument("edge '" + item + "' is not of the form u-v");
    const auto uv = parse_numbers(item.substr(0, dash) + "," + item.substr(dash + 1));
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  return edges;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t k = 0; k < fields.size(); ++k) line += (k ? "," : "") + csv_field(fields[k]);
  return line + "\r\n";
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// gen -----------------------------------------------------------------------

struct GenArgs {
  std::string shape;
  int n = 0;
  std::string legs;
  std::string edges;
  int index = -1;
  Vertex root = 1;
  std::string orient;
  std::string output;
};

int run_gen(const GenArgs& a) {
  const Orientation o = parse_orientation(a.orient);
  if (o == Orientation::General) throw InvalidArgument("--orient must be sink or source");
  DiGraph d;
  if (a.shape == "star") {
    d = build_star(a.n, o);
  } else if (a.shape == "path") {
    d = build_path(a.n, o);
  } else if (a.shape == "spider") {
    std::vector<int> legs;
    for (long x : parse_numbers(a.legs)) legs.push_back(static_cast<int>(x));
    d = build_spider(legs, o);
  } else if (a.shape == "tree") {
    if (!a.edges.empty()) {
      d = build_tree(a.n, parse_edge_list(a.edges), a.root, o);
    } else {
      const auto trees = all_rooted_trees(a.n);
      if (a.index < 0 || a.index >= static_cast<int>(trees.size()))
        throw InvalidArgument("--index must be in 0.." + std::to_string(trees.size() - 1) + " for n=" +
                              std::to_string(a.n));
      d = to_digraph(trees[a.index], o);
    }
  } else {
    throw InvalidArgument("unknown shape '" + a.shape + "'");
  }
  const std::string text = format_graph(d);
  if (a.output.empty() || a.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(a.output);
    if (!out) throw InvalidArgument("cannot write " + a.output);
    out << text;
  }
  return kOk;
}

// check / flip ----------------------------------------------------------------

int run_check(const Globals& g, const std::string& graph, const std::string& seq) {
  const DiGraph d = load_graph(graph);
  const PrefSeq s = parse_prefs(seq);
  validate_prefs(d, s);
  const auto witness = find_witness(d, s);
  switch (g.report_format()) {
    case ReportFormat::Json: {
      json j = {{"graph_hash", graph_hash(d)}, {"seq", format_prefs(s)}, {"parking_function", witness.has_value()}};
      if (witness) j["witness"] = witness->parked_at;
      print_json(j);
      break;
    }
    case ReportFormat::Csv:
      std::cout << csv_line({"graph_hash", "seq", "parking_function", "witness"})
                << csv_line({graph_hash(d), format_prefs(s), witness ? "true" : "false",
                             witness ? format_prefs(witness->parked_at) : ""});
      break;
    case ReportFormat::Table:
      std::cout << (witness ? "true" : "false") << '\n';
      if (witness) std::cout << "witness " << format_prefs(witness->parked_at) << '\n';
      break;
  }
  return kOk;
}

int run_flip(const Globals& g, const std::string& graph, const std::string& seq, const std::string& rule) {
  const DiGraph d = load_graph(graph);
  const PrefSeq s = parse_prefs(seq);
  validate_prefs(d, s);
  if (rule != "smallest" && rule != "longest") throw InvalidArgument("--rule must be smallest or longest");
  const FlipPlan plan(d, rule == "smallest" ? FlipLeafRule::SmallestLabel : FlipLeafRule::LongestPath);
  const std::string out = format_prefs(plan.apply(s));
  switch (g.report_format()) {
    case ReportFormat::Json:
      print_json({{"graph_hash", graph_hash(d)}, {"seq", format_prefs(s)}, {"flipped", out}});
      break;
    case ReportFormat::Csv:
      std::cout << csv_line({"seq", "flipped"}) << csv_line({format_prefs(s), out});
      break;
    case ReportFormat::Table:
      std::cout << out << '\n';
      break;
  }
  return kOk;
}

// count -----------------------------------------------------------------------

int run_count(const Globals& g, const std::string& graph, int m, const std::string& filter, const std::string& prefix,
              const std::string& pair_mode) {
  const DiGraph d = load_graph(graph);
  const CountOptions opts = g.count_options();
  Count result;
  if (!prefix.empty()) {
    if (!filter.empty()) throw InvalidArgument("--prefix cannot be combined with --filter");
    result = count_completions(d, m, parse_prefs(prefix), opts);
  } else if (filter.empty()) {
    result = count_pf(d, m, opts);
  } else if (filter == "case3a") {
    result = count_case3a(d, m, opts);
  } else if (filter.rfind("root-prefs=", 0) == 0) {
    const auto k = parse_numbers(filter.substr(11));
    if (k.size() != 1) throw InvalidArgument("root-prefs takes one number");
    const auto table = count_by_root_preference(d, m, opts);
    auto it = table.find(static_cast<int>(k[0]));
    result = it == table.end() ? Count(0) : it->second;
  } else if (filter.rfind("first-pair=", 0) == 0) {
    const auto ij = parse_numbers(filter.substr(11));
    if (ij.size() != 2) throw InvalidArgument("first-pair takes I,J");
    PairMode mode = d.orientation() == Orientation::Sink ? PairMode::LeafCollision : PairMode::RootPair;
    if (pair_mode == "root")
      mode = PairMode::RootPair;
    else if (pair_mode == "leaf")
      mode = PairMode::LeafCollision;
    else if (pair_mode != "auto")
      throw InvalidArgument("--pair-mode must be auto, root or leaf");
    result = count_first_pair(d, m, static_cast<int>(ij[0]), static_cast<int>(ij[1]), mode, opts);
  } else {
    throw InvalidArgument("unknown filter '" + filter + "'");
  }

  const std::string filter_text = !prefix.empty() ? "prefix=" + prefix : filter.empty() ? "none" : filter;
  switch (g.report_format()) {
    case ReportFormat::Json:
      print_json({{"graph_hash", graph_hash(d)}, {"m", m}, {"filter", filter_text}, {"count", result.get_str()}});
      break;
    case ReportFormat::Csv:
      std::cout << csv_line({"graph_hash", "m", "filter", "count"})
                << csv_line({graph_hash(d), std::to_string(m), filter_text, result.get_str()});
      break;
    case ReportFormat::Table:
      std::cout << result.get_str() << '\n';
      break;
  }
  return kOk;
}

// formula ---------------------------------------------------------------------

int run_formula(const Globals& g, const std::string& name, const std::string& args) {
  const FormulaValue f = evaluate_formula(name, parse_numbers(args));
  switch (g.report_format()) {
    case ReportFormat::Json: {
      json j = {{"formula", f.provenance}};
      for (const auto& [key, value] : f.values) j[key] = value.get_str();
      if (f.check) {
        j["holds"] = f.check->holds;
        j["in_hypothesis"] = f.check->in_hypothesis;
      }
      print_json(j);
      break;
    }
    case ReportFormat::Csv:
      std::cout << csv_line({"formula", "name", "value"});
      for (const auto& [key, value] : f.values) std::cout << csv_line({f.provenance, key, value.get_str()});
      if (f.check) {
        std::cout << csv_line({f.provenance, "holds", f.check->holds ? "true" : "false"});
        std::cout << csv_line({f.provenance, "in_hypothesis", f.check->in_hypothesis ? "true" : "false"});
      }
      break;
    case ReportFormat::Table:
      std::cout << f.provenance << '\n';
      for (const auto& [key, value] : f.values) std::cout << "  " << key << " = " << value.get_str() << '\n';
      if (f.check)
        std::cout << "  holds = " << (f.check->holds ? "true" : "false")
                  << (f.check->in_hypothesis ? "" : " (outside the hypotheses)") << '\n';
      break;
  }
  return kOk;
}

// verify / crossover ----------------------------------------------------------

int run_verify(const Globals& g, const std::string& suite, const SuiteParams& params) {
  const SuiteReport r = run_suite(suite, params, g.count_options());
  std::cout << render(r, g.report_format(), !g.no_timing);
  return r.passed() ? kOk : kVerdictFail;
}

int run_crossover(const Globals& g, int n, int oracle_max_n) {
  const CrossoverResult c = find_crossover(n, oracle_max_n, g.count_options());
  auto text = [](const std::optional<int>& m) { return m ? std::to_string(*m) : std::string("none"); };
  const bool agree = !c.oracle_checked || c.m == c.oracle_m;
  switch (g.report_format()) {
    case ReportFormat::Json: {
      json j = {{"n", n}, {"crossover", c.m ? json(*c.m) : json(nullptr)}};
      if (c.oracle_checked) j["oracle_crossover"] = c.oracle_m ? json(*c.oracle_m) : json(nullptr);
      json rows = json::array();
      for (const auto& row : c.rows)
        rows.push_back({{"m", row.m}, {"sink", row.sink.get_str()}, {"source", row.source.get_str()}});
      j["rows"] = rows;
      print_json(j);
      break;
    }
    case ReportFormat::Csv:
      std::cout << csv_line({"n", "m", "sink", "source"});
      for (const auto& row : c.rows)
        std::cout << csv_line({std::to_string(n), std::to_string(row.m), row.sink.get_str(), row.source.get_str()});
      break;
    case ReportFormat::Table: {
      std::size_t w = 6;
      for (const auto& row : c.rows) w = std::max({w, row.sink.get_str().size() + 2, row.source.get_str().size() + 2});
      std::cout << "   m  " << std::string(w - 4, ' ') << "sink  " << std::string(w - 6, ' ') << "source\n";
      for (const auto& row : c.rows) {
        const std::string a = row.sink.get_str(), b = row.source.get_str();
        std::cout << std::string(4 - std::min<std::size_t>(4, std::to_string(row.m).size()), ' ') << row.m << "  "
                  << std::string(w - a.size(), ' ') << a << "  " << std::string(w - b.size(), ' ') << b
                  << (row.source > row.sink ? "  *" : "") << '\n';
      }
      std::cout << "crossover " << text(c.m);
      if (c.oracle_checked) std::cout << " (oracle " << text(c.oracle_m) << ")";
      std::cout << '\n';
      break;
    }
  }
  return agree ? kOk : kVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parking functions on directed graphs and rooted trees"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--no-timing", g.no_timing, "Omit elapsed times from reports");
  app.add_option("--threads", g.threads, "Worker threads (default: PARKLOT_THREADS or all cores)");
  app.add_option("--budget", g.budget, "Largest number of sequences one count may enumerate");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a .pg graph file");
  gen_cmd->add_option("--shape", gen.shape, "star | path | spider | tree")
      ->required()
      ->check(CLI::IsMember({"star", "path", "spider", "tree"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--legs", gen.legs, "Spider leg lengths, comma separated");
  gen_cmd->add_option("--edges", gen.edges, "Undirected tree edges as u-v,u-v,...");
  gen_cmd->add_option("--root", gen.root, "Root for --edges");
  gen_cmd->add_option("--index", gen.index, "Index into the generated rooted trees on n vertices");
  gen_cmd->add_option("--orient", gen.orient, "sink | source")->required();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  std::string graph, seq, rule = "smallest";
  auto* check_cmd = app.add_subcommand("check", "Decide whether a sequence is a parking function");
  check_cmd->add_option("--graph", graph, "Graph file")->required();
  check_cmd->add_option("--seq", seq, "Preferences, comma separated")->required();

  auto* flip_cmd = app.add_subcommand("flip", "Apply the flip involution to a sequence");
  flip_cmd->add_option("--graph", graph, "Tree file")->required();
  flip_cmd->add_option("--seq", seq, "Preferences, comma separated")->required();
  flip_cmd->add_option("--rule", rule, "Leaf choice for flip-paths: smallest | longest");

  int m = 0;
  std::string filter, prefix, pair_mode = "auto";
  auto* count_cmd = app.add_subcommand("count", "Count parking functions by exhaustive search");
  count_cmd->add_option("--graph", graph, "Graph file")->required();
  count_cmd->add_option("-m", m, "Number of cars")->required();
  count_cmd->add_option("--filter", filter, "root-prefs=K | first-pair=I,J | case3a");
  count_cmd->add_option("--prefix", prefix, "Count completions of these fixed preferences");
  count_cmd->add_option("--pair-mode", pair_mode, "first-pair classes: auto | root | leaf");

  std::string formula_name, formula_args;
  auto* formula_cmd = app.add_subcommand("formula", "Evaluate a closed-form count or inequality");
  formula_cmd->add_option("--name", formula_name, "Formula name")->required();
  formula_cmd->add_option("--args", formula_args, "Arguments, comma separated")->required();
  formula_cmd->footer("Formulas: " + [] {
    std::string s;
    for (const auto& name : formula_names()) s += (s.empty() ? "" : ", ") + name;
    return s;
  }());

  std::string suite;
  SuiteParams params;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "Suite name")->required();
  verify_cmd->add_option("--max-n", params.max_n, "Largest n (suite default when omitted)");
  verify_cmd->add_option("--max-m", params.max_m, "Largest m where the suite uses one");
  verify_cmd->add_option("--seed", params.seed, "Seed for generated instances");
  verify_cmd->footer("Suites: " + [] {
    std::string s;
    for (const auto& name : suite_names()) s += (s.empty() ? "" : ", ") + name;
    return s;
  }());

  int cross_n = 0, oracle_max_n = 7;
  auto* cross_cmd = app.add_subcommand("crossover", "Smallest m where the source star has more parking functions");
  cross_cmd->add_option("--n", cross_n, "Star size")->required();
  cross_cmd->add_option("--oracle-max-n", oracle_max_n, "Confirm by brute force up to this n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*check_cmd) return run_check(g, graph, seq);
    if (*flip_cmd) return run_flip(g, graph, seq, rule);
    if (*count_cmd) return run_count(g, graph, m, filter, prefix, pair_mode);
    if (*formula_cmd) return run_formula(g, formula_name, formula_args);
    if (*verify_cmd) return run_verify(g, suite, params);
    if (*cross_cmd) return run_crossover(g, cross_n, oracle_max_n);
  } catch (const BudgetExceeded& e) {
    std::cerr << "parklot: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "parklot: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
