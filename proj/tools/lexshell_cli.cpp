#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "lexshell/suites.hpp"

namespace {

using namespace lexshell;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

int print_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::cout << json{{"error", message}, {"exit_code", kError}}.dump(2) << "\n";
  return kError;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

struct GraphArgs {
  std::string descriptor;
  bool dot = false;
  bool as_json = false;
};

int run_graph(const GraphArgs& args) {
  const Graph g = parse_graph(args.descriptor);
  if (args.dot) {
    std::cout << to_dot(g);
  } else {
    std::cout << graph_to_json(g).dump() << "\n";
  }
  std::cerr << args.descriptor << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  return kHolds;
}

struct CheckArgs {
  std::string kind;
  std::string descriptor;
  std::optional<double> timeout;
  int threads = 1;
  bool symmetry = false;
  std::string certificate_path;
  std::string verify_path;
};

int run_check_command(const CheckArgs& args) {
  const CheckKind kind = parse_check_kind(args.kind);
  const Input input = parse_input(args.descriptor);

  if (!args.verify_path.empty()) {
    json cert = read_json_file(args.verify_path);
    // Whole check reports are accepted too.
    if (cert.contains("certificate")) cert = cert["certificate"];
    const bool accepted = verify_certificate(kind, input, cert);
    std::cout << json{{"kind", to_string(kind)},
                      {"input", args.descriptor},
                      {"certificate_file", args.verify_path},
                      {"verified", accepted},
                      {"exit_code", accepted ? kHolds : kFails}}
                     .dump(2)
              << "\n";
    std::cerr << to_string(kind) << " certificate for " << args.descriptor << ": "
              << (accepted ? "accepted" : "REJECTED") << "\n";
    return accepted ? kHolds : kFails;
  }

  RunConfig cfg;
  cfg.timeout_seconds = args.timeout;
  cfg.threads = args.threads;
  cfg.cyclic_symmetry = args.symmetry;
  const CheckResult result = run_check(kind, input, args.descriptor, cfg);
  json report = result.to_json();
  if (result.certificate && !args.certificate_path.empty()) {
    std::ofstream(args.certificate_path) << result.certificate->dump() << "\n";
    report["certificate_file"] = args.certificate_path;
  }
  std::cout << report.dump(2) << "\n";

  std::cerr << to_string(kind) << " " << args.descriptor << ": ";
  if (!result.error.empty()) {
    std::cerr << "error: " << result.error;
  } else if (!result.holds) {
    std::cerr << "unknown (budget exhausted)";
  } else if (!result.value.is_null() && (kind == CheckKind::alpha || kind == CheckKind::homology)) {
    std::cerr << result.value.dump();
  } else {
    std::cerr << (*result.holds ? "yes" : "no");
  }
  std::cerr << "  [" << result.stats.seconds << " s, " << result.stats.nodes << " nodes]\n";
  return result.exit_code();
}

struct SuiteArgs {
  std::string name;
  std::uint64_t seed = RunConfig{}.seed;
  bool deep = false;
  int threads = 1;
  std::optional<double> timeout;
  bool symmetry = false;
  std::string cert_dir;
  std::string regression;
  bool bless = false;
};

RunConfig config_from(const SuiteArgs& args) {
  RunConfig cfg;
  cfg.seed = args.seed;
  cfg.deep = args.deep;
  cfg.threads = args.threads;
  cfg.timeout_seconds = args.timeout;
  cfg.cyclic_symmetry = args.symmetry;
  cfg.certificate_dir = args.cert_dir;
  cfg.regression_file = args.regression;
  cfg.bless = args.bless;
  return cfg;
}

int emit(const SuiteReport& report) {
  std::cout << report.to_json().dump(2) << "\n";
  std::cerr << report.summary_table();
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexshell: graph products, independence complexes and their combinatorial properties"};
  app.require_subcommand(1);

  GraphArgs graph_args;
  auto* graph_cmd = app.add_subcommand("graph", "Build a graph and print it as JSON or DOT");
  graph_cmd->add_option("desc", graph_args.descriptor, "Graph descriptor, inline JSON or JSON file")->required();
  auto* dot_flag = graph_cmd->add_flag("--dot", graph_args.dot, "Emit Graphviz DOT with a circular layout");
  graph_cmd->add_flag("--json", graph_args.as_json, "Emit JSON (default)")->excludes(dot_flag);

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Run one property check");
  check_cmd->add_option("kind", check_args.kind, "pure | shellable | vd | cm | alpha | homology")
      ->required()
      ->check(CLI::IsMember({"pure", "shellable", "vd", "cm", "alpha", "homology"}));
  check_cmd->add_option("desc", check_args.descriptor, "Graph or complex descriptor")->required();
  check_cmd->add_option("--timeout", check_args.timeout, "Time budget in seconds")->check(CLI::PositiveNumber);
  check_cmd->add_option("--threads", check_args.threads, "Worker threads for the search")->check(CLI::PositiveNumber);
  check_cmd->add_flag("--symmetry", check_args.symmetry, "Cyclic-rotation memo reduction for circulant inputs");
  check_cmd->add_option("--certificate", check_args.certificate_path, "Write the certificate of a yes verdict here");
  check_cmd->add_option("--verify-only", check_args.verify_path, "Replay a stored certificate instead of searching");

  SuiteArgs suite_args;
  bool list_suites = false;
  auto* suite_cmd = app.add_subcommand("suite", "Run a named validation suite");
  suite_cmd->add_option("name", suite_args.name, "Suite name");
  suite_cmd->add_flag("--list", list_suites, "List suite names");
  suite_cmd->add_option("--seed", suite_args.seed, "Seed for sampled instances");
  suite_cmd->add_flag("--deep", suite_args.deep, "Include the slow milestone instances");
  suite_cmd->add_option("--threads", suite_args.threads, "Worker pool size")->check(CLI::PositiveNumber);
  suite_cmd->add_option("--timeout", suite_args.timeout, "Per-check budget in seconds")->check(CLI::PositiveNumber);
  suite_cmd->add_flag("--symmetry", suite_args.symmetry, "Cyclic-rotation memo reduction");
  suite_cmd->add_option("--cert-dir", suite_args.cert_dir, "Directory receiving one file per certificate");
  suite_cmd->add_option("--regression", suite_args.regression, "Regression constants file");
  suite_cmd->add_flag("--bless", suite_args.bless, "Overwrite the regression file with computed constants");

  SuiteArgs family_args;
  family_args.timeout = 60.0;
  int s_min = 0;
  int s_max = 0;
  auto* family_cmd = app.add_subcommand("family", "Explore C_{4s}(1,s,2s) under a per-check budget");
  family_cmd->add_option("s-min", s_min, "Smallest s (>= 4)")->required();
  family_cmd->add_option("s-max", s_max, "Largest s")->required();
  family_cmd->add_option("--timeout", family_args.timeout, "Per-check budget in seconds (default 60)")
      ->check(CLI::PositiveNumber);
  family_cmd->add_option("--threads", family_args.threads, "Worker threads per check")->check(CLI::PositiveNumber);
  family_cmd->add_flag("--symmetry", family_args.symmetry, "Cyclic-rotation memo reduction");
  family_cmd->add_option("--cert-dir", family_args.cert_dir, "Directory receiving certificates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  try {
    if (graph_cmd->parsed()) return run_graph(graph_args);
    if (check_cmd->parsed()) return run_check_command(check_args);
    if (suite_cmd->parsed()) {
      if (list_suites) {
        for (const auto& name : suite_names()) std::cout << name << "\n";
        return kHolds;
      }
      if (suite_args.name.empty()) return print_error("suite name required (see --list)");
      return emit(run_suite(suite_args.name, config_from(suite_args)));
    }
    if (family_cmd->parsed()) return emit(explore_family(s_min, s_max, config_from(family_args)));
  } catch (const std::exception& ex) {
    return print_error(ex.what());
  }
  return kError;
}
