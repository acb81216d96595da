#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "polyrank/polyrank.hpp"

using namespace polyrank;
using nlohmann::json;

namespace {

const ToleranceProfile kTol;

// run the command line tool, capture stdout, return the exit code
int runCli(const std::string& args, std::string& output) {
  const std::string cmd = std::string(POLYRANK_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  output.clear();
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  const int status = ::pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string tmpPath(const std::string& name) { return "/tmp/polyrank_harness_" + name; }

}  // namespace

TEST_CASE("polynomial JSON round trips exactly") {
  auto p = randomPolynomial(2, 3, 2, 1u);
  CHECK(polynomialFromJson(toJson(p)) == p);
  // and through an actual serialize/parse cycle
  auto q = polynomialFromJson(json::parse(toJson(p).dump()));
  CHECK(q == p);
}

TEST_CASE("malformed polynomial JSON is rejected with a parse error") {
  auto good = toJson(randomPolynomial(2, 2, 1, 2u));
  json noGrade = good;
  noGrade.erase("grade");
  CHECK_THROWS_AS(polynomialFromJson(noGrade), ParseError);
  json shortCoeffs = good;
  shortCoeffs["coeffs"].erase(1);
  CHECK_THROWS_AS(polynomialFromJson(shortCoeffs), ParseError);
  json badEntry = good;
  badEntry["coeffs"][0][0][0] = "x";
  CHECK_THROWS_AS(polynomialFromJson(badEntry), ParseError);
  CHECK_THROWS_AS(polynomialFromJson(json::array()), ParseError);
}

TEST_CASE("signature JSON round trips") {
  StructureSignature sig;
  sig.m = 3;
  sig.n = 4;
  sig.grade = 2;
  sig.rank = 2;
  sig.rightMinimalIndices = {0, 1};
  sig.leftMinimalIndices = {1};
  sig.finiteStructure = {FiniteEigenvalue{Complex(0.5, -0.25), {1, 2}}};
  sig.infiniteMultiplicities = {1};
  auto back = signatureFromJson(toJson(sig));
  CHECK(back.rank == sig.rank);
  CHECK(back.rightMinimalIndices == sig.rightMinimalIndices);
  CHECK(back.leftMinimalIndices == sig.leftMinimalIndices);
  CHECK(back.infiniteMultiplicities == sig.infiniteMultiplicities);
  REQUIRE(back.finiteStructure.size() == 1);
  CHECK(back.finiteStructure[0].value == Complex(0.5, -0.25));
  CHECK(back.finiteStructure[0].multiplicities == IndexList{1, 2});
}

TEST_CASE("generic structure JSON carries the enumeration data") {
  auto j = toJson(genericStructure(2, 3, 1, 2, 1));
  CHECK(j["a"] == 1);
  CHECK(j["codim"] == 9);
  CHECK(j["right"] == json::array({0, 1}));
  CHECK(j["left"] == json::array({1}));
  auto fr = toJson(genericFullRank(3, 3, 2));
  CHECK(fr["full_rank"] == true);
  CHECK(fr["regular"] == true);
  CHECK(fr["simple_eigenvalues"] == 6);
}

TEST_CASE("polynomial files are read back and bad files rejected") {
  auto p = randomPolynomial(3, 2, 1, 3u);
  const std::string path = tmpPath("roundtrip.json");
  writeTextFile(path, toJson(p).dump());
  CHECK(readPolynomialFile(path) == p);
  CHECK_THROWS_AS(readPolynomialFile(tmpPath("does_not_exist.json")), ParseError);
  const std::string bad = tmpPath("bad.json");
  writeTextFile(bad, "{ not json");
  CHECK_THROWS_AS(readPolynomialFile(bad), ParseError);
}

TEST_CASE("sweep accounting is conserved and deterministic") {
  SweepConfig config;
  config.m = 2;
  config.n = 3;
  config.r = 1;
  config.d = 2;
  config.trials = 10;
  config.seed = 31u;
  auto report = runSweep(config);
  int total = report.unmatched + static_cast<int>(report.failures.size());
  for (const auto& [a, count] : report.histogram) total += count;
  CHECK(total == config.trials);
  CHECK(report.rows.size() == 10);
  // default split has every factor degree maxed out, so a = 0 dominates
  CHECK(report.histogram[0] >= 9);

  auto again = runSweep(config);
  CHECK(sweepCsv(report) == sweepCsv(again));
  CHECK(sweepJson(report).dump() == sweepJson(again).dump());

  auto j = sweepJson(report);
  CHECK(j["parameters"]["m"] == 2);
  CHECK(j.contains("histogram"));
  const std::string csv = sweepCsv(report);
  CHECK(csv.rfind("trial,a_classified,right_indices,left_indices,residual_balance\n", 0) == 0);
}

TEST_CASE("a sweep with an explicit split targets the matching structure") {
  SweepConfig config;
  config.m = 2;
  config.n = 3;
  config.r = 1;
  config.d = 2;
  config.trials = 10;
  config.seed = 77u;
  config.split = std::vector<int>{1};  // rd - a = 1, so a = 1
  auto report = runSweep(config);
  CHECK(report.histogram[1] >= 9);
}

TEST_CASE("full-rank sweeps classify against the single full-rank structure") {
  SweepConfig config;
  config.m = 2;
  config.n = 3;
  config.r = 2;
  config.d = 1;
  config.trials = 10;
  config.seed = 5u;
  config.fullRank = true;
  auto report = runSweep(config);
  CHECK(report.histogram[0] == 10);
}

TEST_CASE("perturbation ratios stay under the bound for small deltas") {
  PerturbConfig config;
  config.m = 2;
  config.n = 3;
  config.d = 2;
  config.delta = 1e-6;
  config.trials = 5;
  config.seed = 91u;
  auto report = runPerturb(config);
  CHECK(report.pivotFailures == 0);
  CHECK(report.maxRatio <= report.bound);
  CHECK(report.bound == doctest::Approx(16.0));
  CHECK(!report.deltaAboveThreshold);

  config.delta = 0.5;  // way past the safe range; must be flagged
  config.trials = 2;
  auto loud = runPerturb(config);
  CHECK(loud.deltaAboveThreshold);
}

TEST_CASE("cli: enumerate is stable and well formed") {
  std::string out1, out2;
  CHECK(runCli("enumerate -m 2 -n 3 -r 1 -d 2", out1) == 0);
  CHECK(runCli("enumerate -m 2 -n 3 -r 1 -d 2", out2) == 0);
  CHECK(out1 == out2);
  CHECK(out1.find("codim") != std::string::npos);
  CHECK(out1.find("10") != std::string::npos);

  std::string js;
  CHECK(runCli("enumerate -m 2 -n 3 -r 1 -d 2 --json", js) == 0);
  auto j = json::parse(js);
  CHECK(j["structures"].size() == 3);
}

TEST_CASE("cli: codim prints single values") {
  std::string out;
  CHECK(runCli("codim -m 2 -n 3 -r 1 -d 2 -a 1", out) == 0);
  CHECK(out == "9\n");
}

TEST_CASE("cli: usage errors exit with code 2") {
  std::string out;
  CHECK(runCli("enumerate -m 2 -r 1 -d 2", out) == 2);       // missing -n
  CHECK(runCli("frobnicate", out) == 2);                     // unknown subcommand
  CHECK(runCli("analyze /tmp/polyrank_harness_missing_file.json", out) == 2);
  CHECK(runCli("realize -m 2 -n 3 -r 1 -d 2", out) == 2);    // needs -a or --split
}

TEST_CASE("cli: an unattainable tolerance surfaces as a numerical failure") {
  std::string out;
  CHECK(runCli("realize -m 2 -n 3 -r 1 -d 2 -a 1 --tol 1e-30", out) == 3);
}

TEST_CASE("cli: realize then analyze reproduces the requested structure") {
  const std::string path = tmpPath("realized.json");
  std::string out;
  REQUIRE(runCli("realize -m 2 -n 3 -r 1 -d 2 -a 1 --seed 7 --out " + path, out) == 0);
  std::string sigOut;
  REQUIRE(runCli("analyze " + path, sigOut) == 0);
  auto sig = signatureFromJson(json::parse(sigOut));
  CHECK(sig.rank == 1);
  CHECK(sig.rightMinimalIndices == IndexList{0, 1});
  CHECK(sig.leftMinimalIndices == IndexList{1});
  CHECK(!sig.hasElementaryDivisors());
}

TEST_CASE("cli: the seed environment variable matches the flag") {
  std::string viaFlag, viaEnv;
  CHECK(runCli("realize -m 2 -n 3 -r 1 -d 1 -a 0 --seed 99", viaFlag) == 0);
  const std::string cmd = "POLYRANK_SEED=99 " + std::string(POLYRANK_CLI) +
                          " realize -m 2 -n 3 -r 1 -d 1 -a 0 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) viaEnv.append(buf, got);
  REQUIRE(WEXITSTATUS(::pclose(pipe)) == 0);
  CHECK(viaFlag == viaEnv);
}

TEST_CASE("cli: sweep emits csv rows") {
  std::string out;
  CHECK(runCli("sweep -m 2 -n 3 -r 1 -d 2 --trials 5 --seed 3 --csv", out) == 0);
  CHECK(out.rfind("trial,a_classified", 0) == 0);
  int lines = 0;
  for (char ch : out)
    if (ch == '\n') ++lines;
  CHECK(lines == 6);  // header + 5 rows
}

TEST_CASE("cli: perturb reports the ratio summary") {
  std::string out;
  CHECK(runCli("perturb -m 2 -n 2 -d 2 --trials 3 --seed 11 --json", out) == 0);
  auto j = json::parse(out);
  CHECK(j["pivot_failures"] == 0);
  CHECK(j["max_ratio"].get<double>() <= j["bound"].get<double>());
}
