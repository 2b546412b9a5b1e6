#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexshell/io.hpp"

namespace lexshell {

struct RunConfig {
  std::optional<double> timeout_seconds;  // per individual check; none = unlimited
  int threads = 1;
  std::uint64_t seed = 20140101;
  bool cyclic_symmetry = false;
  bool deep = false;
  // When set, every certificate behind a yes verdict is written here and its
  // path recorded. Certificates are always replayed through the verifiers.
  std::filesystem::path certificate_dir;
  // Regression constants for the milestone suite.
  std::filesystem::path regression_file;
  bool bless = false;

  CheckOptions check_options() const;
};

enum class InstanceStatus { pass, fail, unknown, skipped, error };
std::string to_string(InstanceStatus s);

struct InstanceRecord {
  std::string descriptor;
  json verdicts = json::object();
  std::vector<std::string> certificate_paths;
  double seconds = 0.0;
  InstanceStatus status = InstanceStatus::pass;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  // Budgeted suites list unknown instances without failing on them.
  bool budgeted = false;
  std::vector<InstanceRecord> records;
  json notes = json::array();

  std::size_t count(InstanceStatus s) const;
  bool passed() const;
  // 0 pass, 1 at least one failure, 2 errors or unknowns only.
  int exit_code() const;

  json to_json() const;
  std::string summary_table() const;
};

enum class CheckKind { pure, shellable, vd, cm, alpha, homology };
CheckKind parse_check_kind(std::string_view name);
std::string to_string(CheckKind k);

struct CheckResult {
  CheckKind kind = CheckKind::pure;
  std::string descriptor;
  // Property verdict; empty when unknown or on error. alpha and homology
  // report true whenever they computed a value.
  std::optional<bool> holds;
  Verdict verdict = Verdict::unknown;
  json value;
  std::optional<json> certificate;
  SearchStats stats;
  std::string error;

  int exit_code() const;
  json to_json() const;
};

// Graph inputs are checked through their independence complex.
CheckResult run_check(CheckKind kind, const Input& input, std::string descriptor, const RunConfig& cfg);

// Replays a stored certificate against the input. Only shellable and vd carry
// certificates.
bool verify_certificate(CheckKind kind, const Input& input, const json& certificate);

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const RunConfig& cfg);

// C_{4s}(1, s, 2s) for s in [s_min, s_max], s >= 4, under the configured budget.
SuiteReport explore_family(int s_min, int s_max, const RunConfig& cfg);

// Isomorphism-class representatives of graphs on exactly n vertices, n <= 6,
// in a fixed order. Used to build the exhaustive suite grids.
const std::vector<Graph>& small_graph_classes(int n);
// Every labeled graph on exactly n vertices, n <= 5.
std::vector<Graph> labeled_graphs(int n);

}  // namespace lexshell
