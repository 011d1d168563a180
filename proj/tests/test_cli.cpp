#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = weylcyc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }
}  // namespace

using weylcyc::cli::ExitCode;

TEST_CASE("eval-tau on the generator wedge") {
  const auto r = run({"eval-tau", "--n", "1", "--chain", "[1;p1;q1] - [1;q1;p1]", "--format", "json"});
  REQUIRE(r.code == ExitCode::kPass);
  const auto j = json_of(r);
  CHECK(j["results"][0]["value"] == "1/1");
  CHECK(j["results"][0]["pairing"]["mismatch"] == true);
  CHECK(r.err.find("runtime") != std::string::npos);
}

TEST_CASE("eval-tau lower components and matrices") {
  const auto r0 = run({"eval-tau", "--n", "1", "--k", "0", "--chain", "[1]", "--format", "json"});
  REQUIRE(r0.code == ExitCode::kPass);
  CHECK(json_of(r0)["results"][0]["value"] == "1/1");
  const auto rm = run({"eval-tau", "--n", "1", "--r", "2", "--k", "0", "--chain", "[{{1,0},{0,1}}]", "--format", "json"});
  REQUIRE(rm.code == ExitCode::kPass);
  CHECK(json_of(rm)["results"][0]["value"] == "2/1");
}

TEST_CASE("eval-tau reads chains from a file") {
  const std::string path = "weylcyc_cli_chains.txt";
  {
    std::ofstream f(path);
    f << "[1;p1;q1] - [1;q1;p1]\n\n[p1;q1;q1]\n";
  }
  const auto r = run({"eval-tau", "--n", "1", "--file", path, "--format", "json"});
  std::remove(path.c_str());
  REQUIRE(r.code == ExitCode::kPass);
  CHECK(json_of(r)["results"].size() == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({"eval-tau", "--n", "1", "--chain", "[1; p1 +; q1]"}).code == ExitCode::kUsage);
  const auto bad = run({"eval-tau", "--n", "1", "--chain", "[1; p1 +; q1]"});
  CHECK(bad.err.find("position") != std::string::npos);
  CHECK(run({"eval-tau", "--n", "1", "--chain", "[1; p1]"}).code == ExitCode::kUsage);
  CHECK(run({"verify", "--suite", "no-such-suite"}).code == ExitCode::kUsage);
  CHECK(run({"frobnicate"}).code == ExitCode::kUsage);
  CHECK(run({"table", "bernoulli", "4", "--format", "xml"}).code == ExitCode::kUsage);
  CHECK(run({"--help"}).code == ExitCode::kPass);
}

TEST_CASE("caps map to their own exit code") {
  CHECK(run({"table", "cycle-weights", "12"}).code == ExitCode::kCapExceeded);
  CHECK(run({"eval-tau", "--n", "1", "--chain", "[p1^3*q1^3; p1^3; q1^3]", "--degree-cap", "2"}).code ==
        ExitCode::kCapExceeded);
}

TEST_CASE("verify reports suites") {
  const auto r = run({"verify", "--suite", "cocycle", "--format", "json"});
  CHECK(r.code == ExitCode::kPass);
  const auto j = json_of(r);
  CHECK(j["passed"] == true);
  CHECK(j["identities"].size() >= 2);
  // same arguments, same bytes
  CHECK(run({"verify", "--suite", "cocycle", "--format", "json"}).out == r.out);
  const auto t = run({"verify", "--suite", "lemma-2-2", "--format", "text"});
  CHECK(t.code == ExitCode::kPass);
  CHECK(t.out.find("lemma-2-2") != std::string::npos);
}

TEST_CASE("tables") {
  const auto b = run({"table", "bernoulli", "6", "--format", "json"});
  REQUIRE(b.code == ExitCode::kPass);
  const auto jb = json_of(b);
  CHECK(jb["rows"][2]["B_j"] == "1/6");
  CHECK(jb["rows"][6]["B_j"] == "1/42");
  const auto c = run({"table", "cycle-weights", "4", "--format", "json"});
  REQUIRE(c.code == ExitCode::kPass);
  const auto jc = json_of(c);
  CHECK(jc["rows"][0]["cube_integral"] == "-1/12");
  const auto a = run({"table", "ahat-components", "4", "--matrix", "1,2;3,-1", "--format", "json"});
  REQUIRE(a.code == ExitCode::kPass);
  CHECK(a.out.find("-7/12") != std::string::npos);
  CHECK(run({"table", "ahat-components", "4", "--seed", "3", "--format", "json"}).out ==
        run({"table", "ahat-components", "4", "--seed", "3", "--format", "json"}).out);
}
