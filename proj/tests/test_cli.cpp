#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and captures stdout.
Run cli(const std::string& args) {
  const std::string command = std::string(LEXSHELL_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count(const std::string& text, const char* pattern) {
  const std::regex re(pattern, std::regex::multiline);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "lexshell_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("graph command") {
  Run r = cli("graph 'C4(1)' --dot");
  CHECK(r.code == 0);
  CHECK(count(r.out, R"(^  \d+ \[label)") == 4);
  CHECK(count(r.out, R"(^  \d+ -- \d+;)") == 4);
  r = cli("graph 'C16(1,4,8)' --dot");
  CHECK(count(r.out, R"(^  \d+ \[label)") == 16);
  CHECK(count(r.out, R"(^  \d+ -- \d+;)") == 40);
  r = cli(R"(graph '{"n":2,"edges":[[0,1]]}' --dot)");
  CHECK(count(r.out, R"(^  \d+ \[label)") == 2);
  CHECK(count(r.out, R"(^  \d+ -- \d+;)") == 1);
  r = cli("graph 'C5(1)' --json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["edges"].size() == 5);
  CHECK(cli("graph 'C5(' ").code == 2);
  CHECK(cli("graph 'C5(1)' --dot --json").code == 2);
}

TEST_CASE("check exit codes") {
  CHECK(cli("check shellable 'C16(1,4,8)'").code == 0);
  CHECK(cli("check vd 'C16(1,4,8)'").code == 1);
  CHECK(cli("check pure 'G3(0-1,1-2)'").code == 1);
  CHECK(cli("check cm 'C5(1)'").code == 0);
  const Run a = cli("check alpha 'C5(1)'");
  CHECK(a.code == 0);
  CHECK(nlohmann::json::parse(a.out)["value"] == 2);
  // NotPure and parse failures are errors.
  const Run np = cli("check vd 'G3(0-1,1-2)'");
  CHECK(np.code == 2);
  CHECK(nlohmann::json::parse(np.out)["error"].get<std::string>().starts_with("NotPure"));
  CHECK(cli("check vd 'nonsense('").code == 2);
  CHECK(cli("check bogus 'C5(1)'").code == 2);
  CHECK(cli("check").code == 2);
  // Budget exhaustion is unknown, reported as 2.
  CHECK(cli("check vd 'C24(1,6,12)' --timeout 0.000001").code == 2);
  CHECK(cli("check vd 'C16(1,4,8)' --threads 3").code == 1);
}

TEST_CASE("certificates round-trip through --verify-only") {
  const auto cert = scratch("c16.json");
  const Run r = cli("check shellable 'C16(1,4,8)' --certificate " + cert.string());
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["certificate_file"] == cert.string());
  CHECK(cli("check shellable 'C16(1,4,8)' --verify-only " + cert.string()).code == 0);
  // The same order is not a shelling of a different complex.
  CHECK(cli("check shellable 'C20(1,5,10)' --verify-only " + cert.string()).code == 1);

  const auto tree = scratch("c5-vd.json");
  REQUIRE(cli("check vd 'C5(1)' --certificate " + tree.string()).code == 0);
  CHECK(cli("check vd 'C5(1)' --verify-only " + tree.string()).code == 0);
  std::ofstream(scratch("bad.json")) << R"({"leaf":"simplex"})";
  CHECK(cli("check vd 'C5(1)' --verify-only " + scratch("bad.json").string()).code == 1);
  CHECK(cli("check vd 'C5(1)' --verify-only /no/such/file").code == 2);
  std::filesystem::remove_all(cert.parent_path());
}

TEST_CASE("suite command") {
  const Run r = cli("suite paper-milestones");
  CHECK(r.code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["passed"] == true);
  CHECK(report["counts"]["skipped"] == 3);
  CHECK(cli("suite no-such-suite").code == 2);
  CHECK(cli("suite --list").code == 0);
  const Run c = cli("suite circulant-product --seed 5 --threads 2");
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["seed"] == 5);
}

TEST_CASE("suite certificates replay through the check command") {
  const auto dir = scratch("certs");
  const Run r = cli("suite paper-milestones --cert-dir " + dir.string());
  REQUIRE(r.code == 0);
  const auto report = nlohmann::json::parse(r.out);
  std::size_t replayed = 0;
  for (const auto& inst : report["instances"]) {
    if (!inst.contains("certificates")) continue;
    for (const auto& path : inst["certificates"]) {
      CHECK(cli("check shellable '" + inst["input"].get<std::string>() + "' --verify-only " + path.get<std::string>())
                .code == 0);
      ++replayed;
    }
  }
  CHECK(replayed == 1);
  std::filesystem::remove_all(dir.parent_path());
}

TEST_CASE("family command") {
  const Run r = cli("family 4 4 --timeout 20");
  CHECK(r.code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["instances"][0]["verdicts"]["shellable"] == "yes");
  CHECK(report["instances"][0]["verdicts"]["vd"] == "no");
  CHECK(cli("family 3 4").code == 2);
}
