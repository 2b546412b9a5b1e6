// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.
//
// Verdicts are exact booleans. The only tolerances are wall-clock ceilings,
// pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "lexshell/suites.hpp"

using namespace lexshell;

namespace {

constexpr double kMilestoneCeilingSeconds = 30 * 60;
constexpr double kOracleSuiteCeilingSeconds = 5 * 60;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& ex) {
    out = {false, std::string("exception: ") + ex.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.ok) ++failures;
  std::printf("%s criterion %d: %s (%s; %.2f s)\n", out.ok ? "PASS" : "FAIL", number, title, out.detail.c_str(),
              seconds);
  std::fflush(stdout);
}

std::string counts(const SuiteReport& r) {
  return std::to_string(r.records.size()) + " instances, " + std::to_string(r.count(InstanceStatus::fail)) +
         " failures, " + std::to_string(r.count(InstanceStatus::unknown)) + " unknown, " +
         std::to_string(r.count(InstanceStatus::error)) + " errors";
}

Outcome suite_outcome(const char* name, RunConfig cfg, double ceiling) {
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport r = run_suite(name, cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool clean = r.count(InstanceStatus::fail) == 0 && r.count(InstanceStatus::unknown) == 0 &&
                     r.count(InstanceStatus::error) == 0 && r.exit_code() == 0 && !r.records.empty();
  return {clean && seconds < ceiling, counts(r)};
}

}  // namespace

int main() {
  RunConfig cfg;
  cfg.threads = 4;

  criterion(1, "C16(1,4,8) shellable with verified certificate, exhaustively not VD", [] {
    const auto start = std::chrono::steady_clock::now();
    const Input in = parse_input("C16(1,4,8)");
    const CheckResult sh = run_check(CheckKind::shellable, in, "C16(1,4,8)", RunConfig{});
    const CheckResult vd = run_check(CheckKind::vd, in, "C16(1,4,8)", RunConfig{});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool cert_ok = sh.certificate && verify_certificate(CheckKind::shellable, in, *sh.certificate);
    const bool ok = sh.verdict == Verdict::yes && sh.exit_code() == 0 && cert_ok && vd.verdict == Verdict::no &&
                    vd.exit_code() == 1 && seconds < kMilestoneCeilingSeconds;
    return Outcome{ok, "shellable " + to_string(sh.verdict) + (cert_ok ? " (certificate accepted)" : "") + ", vd " +
                           to_string(vd.verdict) + ", " + std::to_string(vd.stats.nodes) + " vd nodes"};
  });

  criterion(2, "deep: C20(1,5,10) not VD; C24(1,6,12) CM and not VD", [] {
    RunConfig deep;  // no timeout
    deep.deep = true;
    const Input c20 = parse_input("C20(1,5,10)");
    const Input c24 = parse_input("C24(1,6,12)");
    const CheckResult vd20 = run_check(CheckKind::vd, c20, "C20(1,5,10)", deep);
    const CheckResult cm24 = run_check(CheckKind::cm, c24, "C24(1,6,12)", deep);
    const CheckResult vd24 = run_check(CheckKind::vd, c24, "C24(1,6,12)", deep);
    const bool ok = vd20.holds == false && cm24.holds == true && vd24.holds == false;
    return Outcome{ok, "vd(C20) " + to_string(vd20.verdict) + ", cm(C24) " + to_string(cm24.verdict) + ", vd(C24) " +
                           to_string(vd24.verdict)};
  });

  criterion(3, "topp-volkmann: purity equivalence over all pairs n <= 4", [&] {
    return suite_outcome("topp-volkmann", cfg, kOracleSuiteCeilingSeconds);
  });

  criterion(4, "alpha-product: alpha multiplicative over n <= 5", [&] {
    return suite_outcome("alpha-product", cfg, kOracleSuiteCeilingSeconds);
  });

  criterion(5, "nonshellable: G with an edge, H not complete, sizes <= 4", [&] {
    return suite_outcome("nonshellable", cfg, kOracleSuiteCeilingSeconds);
  });

  criterion(6, "expansion: VD both ways and shellability forward, n <= 5, entries <= 2", [&] {
    return suite_outcome("expansion", cfg, kOracleSuiteCeilingSeconds);
  });

  criterion(7, "circulant-product: connection set matches lex product, n, m <= 8", [&] {
    return suite_outcome("circulant-product", cfg, kOracleSuiteCeilingSeconds);
  });

  criterion(8, "checker chain VD => shellable => CM on pure Ind(G), n <= 6", [&] {
    return suite_outcome("checker-chain", cfg, kOracleSuiteCeilingSeconds);
  });

  criterion(9, "homology: boundary squares to zero, Euler relation, Ind(C5) = (0, 1)", [&] {
    return suite_outcome("homology", cfg, kOracleSuiteCeilingSeconds);
  });

  std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
