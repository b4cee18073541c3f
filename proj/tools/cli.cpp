#include "cli.hpp"

#include "kforest/bounds.hpp"
#include "kforest/colorer.hpp"
#include "kforest/coloring.hpp"
#include "kforest/configurations.hpp"
#include "kforest/discharging.hpp"
#include "kforest/graph.hpp"
#include "kforest/json_io.hpp"
#include "kforest/mad.hpp"
#include "kforest/solvers.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace kforest::cli {

namespace {

struct Stdin {
  const std::string* text;
  bool used = false;
};

std::string read_source(const std::string& path, Stdin& in) {
  if (path == "-") {
    if (in.used) throw std::invalid_argument("stdin can back only one input");
    in.used = true;
    return *in.text;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Picks a graph format from the file extension, then from the content:
// edge-list lines carry spaces or comments, graph6 lines never do.
std::string sniff_format(const std::string& path, const std::string& text) {
  if (ends_with(path, ".g6")) return "g6";
  if (ends_with(path, ".el") || ends_with(path, ".edges") || ends_with(path, ".txt"))
    return "el";
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::string trimmed;
    for (char c : line)
      if (c != '\r') trimmed.push_back(c);
    if (trimmed.empty()) continue;
    if (trimmed[0] == '#') return "el";
    if (trimmed.find(' ') != std::string::npos || trimmed.find('\t') != std::string::npos)
      return "el";
    return "g6";
  }
  throw std::invalid_argument("empty graph input");
}

Graph load_graph(const std::string& path, const std::string& informat, Stdin& in) {
  std::string text = read_source(path, in);
  std::string fmt = informat.empty() ? sniff_format(path, text) : informat;
  if (fmt == "g6") return parse_graph6(text);
  if (fmt == "el") return parse_edge_list(text).graph;
  throw std::invalid_argument("unknown graph format '" + fmt + "'");
}

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad ") + what + ": " + e.what());
  }
}

Coloring load_coloring(const std::string& path, Stdin& in) {
  Json j = parse_json(read_source(path, in), "coloring file");
  if (j.is_object() && j.contains("coloring")) j = j["coloring"];
  return coloring_from_json(j);
}

ListAssignment load_lists(const std::string& path, Stdin& in) {
  Json j = parse_json(read_source(path, in), "lists file");
  if (j.is_object() && j.contains("lists")) j = j["lists"];
  return lists_from_json(j);
}

// Text rendering: one "key: value" line per payload entry; raw_key, when
// present and the payload has it, is printed alone verbatim.
void emit(const Json& payload, const std::string& format, std::ostream& out,
          const char* raw_key = nullptr) {
  if (format == "text") {
    if (raw_key && payload.contains(raw_key)) {
      out << payload[raw_key].get<std::string>() << "\n";
      return;
    }
    for (const auto& kv : payload.items()) {
      if (kv.value().is_string())
        out << kv.key() << ": " << kv.value().get<std::string>() << "\n";
      else
        out << kv.key() << ": " << kv.value().dump() << "\n";
    }
    return;
  }
  out << payload.dump(2) << "\n";
}

int exit_for_solver_status(SolveStatus status) {
  return status == SolveStatus::Exhausted ? kExhausted : kOk;
}

struct CommonArgs {
  std::string graph_path;
  std::string informat;
};

void add_graph_arg(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("graph", args.graph_path, "graph file, or - for stdin");
  cmd->add_option("--in", args.graph_path, "graph file, or - for stdin");
  cmd->add_option("--informat", args.informat, "input graph format: g6 or el")
      ->check(CLI::IsMember({"g6", "el"}));
}

Graph require_graph(const CommonArgs& args, Stdin& in) {
  if (args.graph_path.empty())
    throw std::invalid_argument("no graph input given (positional path or --in)");
  return load_graph(args.graph_path, args.informat, in);
}

void add_budget_args(CLI::App* cmd, SolveBudget& budget) {
  cmd->add_option("--max-nodes", budget.max_nodes, "search node cap");
  cmd->add_option("--timeout-ms", budget.wall_time_ms, "solver wall-clock cap");
}

}  // namespace

int run(const std::vector<std::string>& args, const std::string& stdin_text,
        std::ostream& out, std::ostream& err) {
  Stdin in{&stdin_text};
  CLI::App app{"k-forested coloring toolkit"};
  app.require_subcommand(1);

  std::string format;
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // Subcommand state. Every handler fills payload and code.
  Json payload;
  int code = kOk;
  std::string raw_key;

  CommonArgs g_verify, g_mad, g_girth, g_chrom, g_lc, g_choos, g_choice, g_find, g_color,
      g_disch, g_bounds, g_convert;

  auto* c_verify = app.add_subcommand("verify", "check a coloring");
  add_graph_arg(c_verify, g_verify);
  std::string verify_coloring;
  int verify_k = 0;
  bool verify_partial_flag = false;
  c_verify->add_option("--coloring", verify_coloring, "coloring JSON file")->required();
  c_verify->add_option("-k,--k", verify_k, "frugality parameter")->required();
  c_verify->add_flag("--partial", verify_partial_flag, "check only colored vertices");
  c_verify->callback([&] {
    Graph g = require_graph(g_verify, in);
    Coloring col = load_coloring(verify_coloring, in);
    auto report = verify_partial_flag ? verify_partial(g, col, verify_k)
                                      : verify(g, col, verify_k);
    payload = report_to_json(report);
    code = report.valid ? kOk : kNegative;
  });

  auto* c_mad = app.add_subcommand("mad", "maximum average degree");
  add_graph_arg(c_mad, g_mad);
  bool mad_brute_flag = false;
  c_mad->add_flag("--brute", mad_brute_flag, "exhaustive subset scan (n <= 24)");
  c_mad->callback([&] {
    Graph g = require_graph(g_mad, in);
    if (mad_brute_flag) {
      payload["mad"] = rational_to_json(mad_brute(g));
    } else {
      auto dens = densest_subgraph(g);
      payload["mad"] = rational_to_json(Rational(2) * dens.density);
      payload["witness"] = dens.witness;
    }
  });

  auto* c_girth = app.add_subcommand("girth", "shortest cycle length");
  add_graph_arg(c_girth, g_girth);
  c_girth->callback([&] {
    Graph g = require_graph(g_girth, in);
    auto gi = girth(g);
    payload["girth"] = gi ? Json(*gi) : Json(nullptr);
  });

  auto* c_chrom = app.add_subcommand("chromatic", "fewest colors needed");
  add_graph_arg(c_chrom, g_chrom);
  int chrom_k = 0;
  SolveBudget chrom_budget;
  c_chrom->add_option("-k,--k", chrom_k, "frugality parameter")->required();
  add_budget_args(c_chrom, chrom_budget);
  c_chrom->callback([&] {
    Graph g = require_graph(g_chrom, in);
    auto res = kf_chromatic(g, chrom_k, chrom_budget);
    if (res.status == SolveStatus::Exhausted) {
      payload["chromatic"] = nullptr;
      payload["proven_lower"] = res.proven_lower;
    } else {
      payload["chromatic"] = res.chromatic;
      payload["witness"] = coloring_to_json(res.witness);
    }
    payload["nodes"] = res.nodes;
    code = exit_for_solver_status(res.status);
  });

  auto* c_lc = app.add_subcommand("list-color", "color from explicit lists");
  add_graph_arg(c_lc, g_lc);
  std::string lc_lists;
  int lc_k = 0;
  SolveBudget lc_budget;
  c_lc->add_option("--lists", lc_lists, "lists JSON file")->required();
  c_lc->add_option("-k,--k", lc_k, "frugality parameter")->required();
  add_budget_args(c_lc, lc_budget);
  c_lc->callback([&] {
    Graph g = require_graph(g_lc, in);
    auto lists = load_lists(lc_lists, in);
    auto res = kf_list_color(g, lists, lc_k, lc_budget);
    payload["coloring"] = res.coloring ? coloring_to_json(*res.coloring) : Json(nullptr);
    payload["nodes"] = res.nodes;
    code = res.status == SolveStatus::Exhausted ? kExhausted
           : res.coloring                       ? kOk
                                                : kNegative;
  });

  auto* c_choos = app.add_subcommand("choosable", "test q-list colorability");
  add_graph_arg(c_choos, g_choos);
  int choos_k = 0, choos_q = 0;
  SolveBudget choos_budget;
  c_choos->add_option("-k,--k", choos_k, "frugality parameter")->required();
  c_choos->add_option("-q,--q", choos_q, "list size")->required();
  add_budget_args(c_choos, choos_budget);
  c_choos->callback([&] {
    Graph g = require_graph(g_choos, in);
    auto res = kf_choosable(g, choos_k, choos_q, choos_budget);
    if (res.status == SolveStatus::Exhausted) {
      payload["choosable"] = nullptr;
      code = kExhausted;
    } else {
      payload["choosable"] = res.choosable;
      if (!res.choosable) payload["counterexample"] = lists_to_json(*res.counterexample);
      code = res.choosable ? kOk : kNegative;
    }
    payload["assignments_checked"] = res.assignments_checked;
  });

  auto* c_choice = app.add_subcommand("choice-number", "smallest safe list size");
  add_graph_arg(c_choice, g_choice);
  int choice_k = 0;
  SolveBudget choice_budget;
  c_choice->add_option("-k,--k", choice_k, "frugality parameter")->required();
  add_budget_args(c_choice, choice_budget);
  c_choice->callback([&] {
    Graph g = require_graph(g_choice, in);
    auto res = kf_choice_number(g, choice_k, choice_budget);
    payload["choice_number"] =
        res.status == SolveStatus::Exhausted ? Json(nullptr) : Json(res.choice_number);
    code = exit_for_solver_status(res.status);
  });

  auto* c_find = app.add_subcommand("find-config", "locate a reducible configuration");
  add_graph_arg(c_find, g_find);
  int find_p = 0, find_k = 0;
  c_find->add_option("-p,--p", find_p, "sparseness level (1, 2 or 3)")->required();
  c_find->add_option("-k,--k", find_k, "frugality parameter")->required();
  c_find->callback([&] {
    Graph g = require_graph(g_find, in);
    auto cfg = find_configuration(g, find_p, find_k);
    payload["configuration"] = cfg ? configuration_to_json(*cfg) : Json(nullptr);
    code = cfg ? kOk : kNegative;
  });

  auto* c_color = app.add_subcommand("color", "constructive list coloring");
  add_graph_arg(c_color, g_color);
  std::string color_lists, color_trace;
  int color_k = 0, color_p = 0, color_m = -1;
  bool color_verify_steps = false;
  ColorOptions color_opts;
  c_color->add_option("--lists", color_lists, "lists JSON file")->required();
  c_color->add_option("-k,--k", color_k, "frugality parameter")->required();
  c_color->add_option("-p,--p", color_p, "sparseness level (1, 2 or 3)")->required();
  c_color->add_option("-M,--M", color_m, "degree cap, defaults to max(max degree, k)");
  c_color->add_option("--trace", color_trace, "write the extension trace to this file");
  c_color->add_flag("--verify-steps", color_verify_steps, "re-verify after every step");
  add_budget_args(c_color, color_opts.budget);
  c_color->callback([&] {
    Graph g = require_graph(g_color, in);
    auto lists = load_lists(color_lists, in);
    int M = color_m >= 0 ? color_m
                         : std::max(g.vertex_count() > 0 ? g.max_degree() : 0, color_k);
    color_opts.verify_each_step = color_verify_steps;
    auto res = color(g, lists, color_k, color_p, M, color_opts);
    payload["coloring"] = res.status == ColorStatus::Colored
                              ? coloring_to_json(res.coloring)
                              : Json(nullptr);
    payload["q"] = res.q;
    payload["fallbacks"] = res.trace.fallbacks.size();
    if (!color_trace.empty()) {
      std::ofstream tf(color_trace, std::ios::binary);
      if (!tf) throw std::invalid_argument("cannot write '" + color_trace + "'");
      tf << trace_to_json(res.trace).dump(2) << "\n";
    }
    code = res.status == ColorStatus::Colored          ? kOk
           : res.status == ColorStatus::ProvenImpossible ? kNegative
                                                         : kExhausted;
  });

  auto* c_disch = app.add_subcommand("discharge", "run the discharging check");
  add_graph_arg(c_disch, g_disch);
  int disch_p = 0, disch_k = 0;
  c_disch->add_option("-p,--p", disch_p, "sparseness level (1, 2 or 3)")->required();
  c_disch->add_option("-k,--k", disch_k, "frugality parameter")->required();
  c_disch->callback([&] {
    Graph g = require_graph(g_disch, in);
    auto report = check_bound(g, disch_p, disch_k);
    payload["configs_found"] = Json::array();
    for (const auto& cfg : report.configs_found)
      payload["configs_found"].push_back(configuration_to_json(cfg));
    payload["min_charge"] = rational_to_json(report.min_charge);
    payload["bound"] = rational_to_json(report.bound);
    payload["consistent"] = report.consistent;
    payload["charges"] = charge_state_to_json(report.charges);
    code = report.consistent ? kOk : kNegative;
  });

  auto* c_bounds = app.add_subcommand("bounds", "derived color-count bounds");
  add_graph_arg(c_bounds, g_bounds);
  int bounds_k = 0, bounds_p = 0, bounds_m = -1;
  std::string bounds_mad;
  c_bounds->add_option("-k,--k", bounds_k, "frugality parameter")->required();
  c_bounds->add_option("-p,--p", bounds_p, "sparseness level (1, 2 or 3)");
  c_bounds->add_option("-M,--M", bounds_m, "degree cap, defaults to max(max degree, k)");
  c_bounds->add_option("--mad", bounds_mad, "use this mad value instead of computing it");
  c_bounds->callback([&] {
    Graph g = require_graph(g_bounds, in);
    if (g.vertex_count() == 0) throw std::invalid_argument("bounds: empty graph");
    int delta = g.max_degree();
    int M = bounds_m >= 0 ? bounds_m : std::max(delta, bounds_k);
    Rational mad_value =
        bounds_mad.empty() ? mad(g) : Rational::parse(bounds_mad);
    payload["delta"] = delta;
    payload["M"] = M;
    payload["mad"] = rational_to_json(mad_value);
    payload["lower"] = lower_bound(delta, bounds_k);
    if (bounds_p > 0) {
      Parameters par = params(M, bounds_k, bounds_p, true);
      payload["Q"] = par.Q;
      payload["q"] = par.q;
    }
    if (bounds_k >= 4 && M >= bounds_k) {
      auto up = upper_bound(mad_value, M, bounds_k);
      payload["upper"] = up ? Json(*up) : Json(nullptr);
    } else {
      payload["upper"] = nullptr;
    }
  });

  auto* c_gen = app.add_subcommand("gen", "generate a named graph");
  FamilySpec gen_spec;
  c_gen->add_option("--family", gen_spec.family,
                    "cycle, path, star, complete, complete_bipartite, petersen, "
                    "random_tree")
      ->required();
  c_gen->add_option("--n", gen_spec.n, "size parameter");
  c_gen->add_option("--n2", gen_spec.n2, "second side for complete_bipartite");
  c_gen->add_option("--seed", gen_spec.seed, "seed for random_tree");
  c_gen->add_option("--subdivide", gen_spec.subdivide,
                    "replace each edge by a path with this many inner vertices");
  c_gen->callback([&] {
    if (gen_spec.family == "subdivision")
      throw std::invalid_argument(
          "gen: pass a base family plus --subdivide instead of family 'subdivision'");
    Graph g = generate(gen_spec);
    payload["graph6"] = to_graph6(g);
    payload["n"] = g.vertex_count();
    payload["m"] = g.edge_count();
    raw_key = "graph6";
  });

  auto* c_convert = app.add_subcommand("convert", "translate between graph formats");
  add_graph_arg(c_convert, g_convert);
  std::string convert_to;
  c_convert->add_option("--to", convert_to, "target format: g6 or el")
      ->required()
      ->check(CLI::IsMember({"g6", "el"}));
  c_convert->callback([&] {
    Graph g = require_graph(g_convert, in);
    payload["format"] = convert_to;
    payload["text"] = convert_to == "g6" ? to_graph6(g) : to_edge_list(g);
    raw_key = "text";
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("kforest");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  if (format.empty()) {
    if (const char* env = std::getenv("KFOREST_FORMAT")) format = env;
    if (format != "text" && format != "json") format = "json";
  }
  emit(payload, format, out, raw_key.empty() ? nullptr : raw_key.c_str());
  return code;
}

}  // namespace kforest::cli
