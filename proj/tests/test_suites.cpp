#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "lexshell/suites.hpp"

using namespace lexshell;

TEST_CASE("graph class tables") {
  const std::vector<std::size_t> expected = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) CHECK(small_graph_classes(n).size() == expected[static_cast<std::size_t>(n)]);
  CHECK(labeled_graphs(4).size() == 64);
  CHECK(labeled_graphs(5).size() == 1024);
  CHECK_THROWS(small_graph_classes(7));
  CHECK_THROWS(labeled_graphs(6));
}

TEST_CASE("run_check verdicts and exit codes") {
  RunConfig cfg;
  const Input c16 = parse_input("C16(1,4,8)");
  const CheckResult sh = run_check(CheckKind::shellable, c16, "C16(1,4,8)", cfg);
  CHECK(sh.verdict == Verdict::yes);
  CHECK(sh.exit_code() == 0);
  REQUIRE(sh.certificate.has_value());
  CHECK(verify_certificate(CheckKind::shellable, c16, *sh.certificate));

  const CheckResult vd = run_check(CheckKind::vd, c16, "C16(1,4,8)", cfg);
  CHECK(vd.verdict == Verdict::no);
  CHECK(vd.exit_code() == 1);
  CHECK_FALSE(vd.certificate.has_value());

  const CheckResult a = run_check(CheckKind::alpha, parse_input("C5(1)"), "C5(1)", cfg);
  CHECK(a.value == 2);
  CHECK(a.exit_code() == 0);

  const CheckResult pure = run_check(CheckKind::pure, parse_input("G3(0-1,1-2)"), "P3", cfg);
  CHECK(pure.exit_code() == 1);

  const CheckResult h = run_check(CheckKind::homology, parse_input("C5(1)"), "C5(1)", cfg);
  CHECK(h.value["betti"]["1"] == 1);

  const CheckResult cm = run_check(CheckKind::cm, parse_input("C4(1)"), "C4(1)", cfg);
  CHECK(cm.exit_code() == 1);
}

TEST_CASE("NotPure surfaces as an error") {
  const CheckResult r = run_check(CheckKind::shellable, parse_input("G3(0-1,1-2)"), "P3", RunConfig{});
  CHECK(r.exit_code() == 2);
  CHECK(r.error.starts_with("NotPure"));
  CHECK(r.to_json()["error"].get<std::string>().starts_with("NotPure"));
}

TEST_CASE("exhausted budgets give exit code 2") {
  RunConfig cfg;
  cfg.timeout_seconds = 1e-9;
  const CheckResult r = run_check(CheckKind::vd, parse_input("C24(1,6,12)"), "C24(1,6,12)", cfg);
  CHECK(r.verdict == Verdict::unknown);
  CHECK(r.exit_code() == 2);
  CHECK(r.error.empty());
}

TEST_CASE("certificate verification rejects mismatched certificates") {
  const Input c5 = parse_input("C5(1)");
  CHECK_FALSE(verify_certificate(CheckKind::shellable, c5, json{{"order", {0, 2, 1, 3, 4}}}));
  CHECK_FALSE(verify_certificate(CheckKind::shellable, c5, json{{"order", {0, 1}}}));
  CHECK_FALSE(verify_certificate(CheckKind::vd, c5, json{{"leaf", "simplex"}}));
  CHECK_FALSE(verify_certificate(CheckKind::vd, c5, json{{"nonsense", true}}));
  CHECK_THROWS(verify_certificate(CheckKind::cm, c5, json::object()));
}

TEST_CASE("suite report exit codes") {
  SuiteReport r;
  r.suite = "x";
  r.records.push_back({});
  CHECK(r.exit_code() == 0);
  r.records.push_back({"u", json::object(), {}, 0.0, InstanceStatus::unknown, ""});
  CHECK(r.exit_code() == 2);
  r.budgeted = true;
  CHECK(r.exit_code() == 0);
  r.records.push_back({"f", json::object(), {}, 0.0, InstanceStatus::fail, ""});
  CHECK(r.exit_code() == 1);
  CHECK(r.to_json()["counts"]["fail"] == 1);
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(run_suite("no-such-suite", RunConfig{}), std::invalid_argument);
  CHECK(suite_names().size() == 10);
}

TEST_CASE("sampled instances are determined by the seed") {
  RunConfig a;
  a.threads = 4;
  RunConfig b = a;
  b.threads = 1;
  RunConfig c = a;
  c.seed = a.seed + 1;
  const SuiteReport ra = run_suite("topp-volkmann", a);
  const SuiteReport rb = run_suite("topp-volkmann", b);
  const SuiteReport rc = run_suite("topp-volkmann", c);
  REQUIRE(ra.records.size() == rb.records.size());
  bool same = true;
  for (std::size_t i = 0; i < ra.records.size(); ++i) {
    same = same && ra.records[i].descriptor == rb.records[i].descriptor &&
           ra.records[i].verdicts == rb.records[i].verdicts;
  }
  CHECK(same);
  bool differs = false;
  for (std::size_t i = 0; i < ra.records.size(); ++i) differs = differs || ra.records[i].descriptor != rc.records[i].descriptor;
  CHECK(differs);
  CHECK(ra.to_json()["seed"] == a.seed);
  CHECK(ra.passed());
}

TEST_CASE("milestones without the deep flag skip visibly") {
  RunConfig cfg;
  const SuiteReport r = run_suite("paper-milestones", cfg);
  CHECK(r.passed());
  CHECK(r.count(InstanceStatus::skipped) == 3);
  CHECK(r.count(InstanceStatus::pass) == 1);
  for (const auto& rec : r.records) {
    if (rec.descriptor == "C16(1,4,8)") {
      CHECK(rec.verdicts["shellable"] == true);
      CHECK(rec.verdicts["vd"] == false);
      CHECK(rec.verdicts["shellable_certificate"] == "verified");
    } else {
      CHECK(rec.status == InstanceStatus::skipped);
    }
  }
}

TEST_CASE("regression constants are blessed then compared") {
  const auto dir = std::filesystem::temp_directory_path() / "lexshell_regression_test";
  std::filesystem::create_directories(dir);
  RunConfig cfg;
  cfg.regression_file = dir / "regression.json";
  std::filesystem::remove(cfg.regression_file);
  cfg.bless = true;
  CHECK(run_suite("paper-milestones", cfg).passed());
  std::ifstream in(cfg.regression_file);
  json stored = json::parse(in);
  CHECK(stored["C16(1,4,8)"]["alpha"] == 4);
  CHECK(stored["C16(1,4,8)"]["facets"] == 80);
  cfg.bless = false;
  CHECK(run_suite("paper-milestones", cfg).passed());
  stored["C16(1,4,8)"]["facets"] = 81;
  std::ofstream(cfg.regression_file) << stored.dump();
  CHECK(run_suite("paper-milestones", cfg).exit_code() == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("certificate directory receives replayable files") {
  const auto dir = std::filesystem::temp_directory_path() / "lexshell_cert_test";
  std::filesystem::remove_all(dir);
  RunConfig cfg;
  cfg.certificate_dir = dir;
  const SuiteReport r = run_suite("paper-milestones", cfg);
  std::size_t files = 0;
  for (const auto& rec : r.records) {
    for (const auto& path : rec.certificate_paths) {
      ++files;
      std::ifstream in(path);
      CHECK(verify_certificate(CheckKind::shellable, parse_input(rec.descriptor), json::parse(in)));
    }
  }
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("family explorer") {
  RunConfig cfg;
  cfg.timeout_seconds = 20.0;
  const SuiteReport r = explore_family(4, 4, cfg);
  REQUIRE(r.records.size() == 1);
  CHECK(r.budgeted);
  CHECK(r.records[0].descriptor == "C16(1,4,8)");
  CHECK(r.records[0].verdicts["shellable"] == "yes");
  CHECK(r.records[0].verdicts["vd"] == "no");
  CHECK(r.records[0].verdicts["cm"] == "yes");
  CHECK(r.exit_code() == 0);
  CHECK_THROWS_AS(explore_family(3, 5, cfg), std::invalid_argument);
  CHECK_THROWS_AS(explore_family(6, 5, cfg), std::invalid_argument);
  CHECK_THROWS_AS(explore_family(4, 17, cfg), std::invalid_argument);
}

TEST_CASE("family explorer reports unknown under a tiny budget") {
  RunConfig cfg;
  cfg.timeout_seconds = 1e-9;
  const SuiteReport r = explore_family(6, 6, cfg);
  CHECK(r.records[0].verdicts["vd"] == "unknown");
  CHECK(r.records[0].status == InstanceStatus::unknown);
  CHECK(r.exit_code() == 0);
}
