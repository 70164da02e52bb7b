#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// run the CLI and capture stdout; stderr is folded in so error paths are
// visible in test failures
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SINGRAPH_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("spectrum: exact character-sum route") {
  const auto r = run_cli("spectrum --family sing2 --q 5 --method exact");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, R"({"value":25,"multiplicity":1})"));
  CHECK(contains(r.out, R"({"value":5,"multiplicity":42})"));
  CHECK(contains(r.out, R"({"value":1,"multiplicity":25})"));
  CHECK(contains(r.out, R"({"value":-5,"multiplicity":52})"));
  CHECK(contains(r.out, R"("total_multiplicity":120)"));
}

TEST_CASE("spectrum: both routes agree on the hyperbola graph") {
  const auto r = run_cli("spectrum --family hyperbola --p 5 --n 1 --method both");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, R"("multisets_match":true)"));
}

TEST_CASE("spectrum: cap violations exit 2, bad arguments exit 3") {
  CHECK(run_cli("spectrum --family sing2 --q 997").exit_code == 2);
  CHECK(run_cli("spectrum --family nonsense --q 5").exit_code == 3);
  CHECK(run_cli("spectrum --family sing2 --q 12").exit_code == 3);  // not a prime power
  CHECK(run_cli("frobnicate").exit_code == 3);
}

TEST_CASE("spectrum: csv format") {
  const auto r = run_cli("spectrum --family sing2 --q 3 --method exact --format csv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "value,multiplicity\n9,1\n3,4\n1,9\n-3,10\n"));
}

TEST_CASE("chi: hoffman and theta on a field") {
  const auto r = run_cli("chi --family sing2 --q 7 --bounds hoffman,theta");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, R"("hoffman":{"value":8,"exact_num":8,"exact_den":1})"));
  CHECK(contains(r.out, R"("scheme_bound":64)"));
  CHECK(contains(r.out, R"("proper":true)"));
  CHECK(contains(r.out, R"("lower":8)"));
}

TEST_CASE("chi: kloosterman lower bound and lifted coloring over Z/25") {
  const auto r =
      run_cli("chi --family sing2 --ring zmod --p 5 --n 2 --bounds kloosterman,lift");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, R"("kloosterman":{"value":1.2360679775,"floor":0.559016994375})"));
  CHECK(contains(r.out, R"("verification":"full")"));
  CHECK(contains(r.out, R"("proper":true)"));
  CHECK(contains(r.out, R"("scheme_bound":48)"));
  CHECK(contains(r.out, R"("upper":32)"));
}

TEST_CASE("chi: exact solver with certificate") {
  const auto r = run_cli("chi --family sing2 --q 3 --bounds exact");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, R"("exact":6)"));
  CHECK(contains(r.out, R"("certificate":{"scheme":)"));
  CHECK(contains(r.out, R"("lower":6)"));
  CHECK(contains(r.out, R"("upper":6)"));
}

TEST_CASE("chi: violated coset hypothesis surfaces as a structured error") {
  const auto r = run_cli("chi --family sing2 --q 5 --bounds coset --variant squares");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, R"("coset":{"error":"PreconditionFailed")"));

  const auto r4 = run_cli("chi --family sing2 --q 5 --bounds coset --variant fourth-powers");
  CHECK(r4.exit_code == 0);
  CHECK(contains(r4.out, R"("palette":24)"));
  CHECK(contains(r4.out, R"("proper":true)"));
}

TEST_CASE("verify suites pass on the shipped checks") {
  CHECK(run_cli("verify --suite weil --p 5 --n 3").exit_code == 0);
  CHECK(run_cli("verify --suite embed --p 7 --n 1").exit_code == 0);
  CHECK(run_cli("verify --suite chartable --q 9").exit_code == 0);
  CHECK(run_cli("verify --suite mixing --p 5 --d 2 --trials 100 --seed 0").exit_code == 0);
  CHECK(run_cli("verify --suite sandwich --q 3").exit_code == 0);
  CHECK(run_cli("verify --suite slope --nmat 2 --l 1 --q 5").exit_code == 0);
}

TEST_CASE("identical configuration produces byte-identical output") {
  const std::string cmd = "chi --family sing2 --q 5 --bounds hoffman,theta,greedy --seed 0";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const std::string mix = "verify --suite mixing --p 5 --d 2 --trials 50 --seed 7";
  CHECK(run_cli(mix).out == run_cli(mix).out);
}

TEST_CASE("dimacs export") {
  const auto r = run_cli("spectrum --family sing2 --q 3 --method exact --format dimacs");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "p edge 24 108\n"));
  CHECK(contains(r.out, "e 1 "));
}
