#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(FINDEC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("quasi-shuffle products print canonically") {
  RunResult r = run("qs stuffle \"2\" \"3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "(2,3) + (3,2) + (5)\n");
  CHECK(run("qs shuffle \"x0\" \"x1 x1\"").output == "x0 x1 x1 + x1 x0 x1 + x1 x1 x0\n");
  CHECK(run("qs diamond \"1/0\" \"0/1\"").output == "(0/1,1/0) + (1/0,0/1) + (1/1)\n");
  CHECK(run("qs ldiag \"[x1]\" \"[x1]\"").output == "2*[x1][x1] + [x1^2]\n");
}

TEST_CASE("coproduct prints factorization pairs") {
  RunResult r = run("coprod --semigroup nat-plus 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "(1,1)\n");
}

TEST_CASE("infinite factorization sets refuse with the error name") {
  RunResult r = run("coprod --semigroup mon-laurent x1");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "NonFiniteDecomposition"));
}

TEST_CASE("duality verb reports both sides and the verdict") {
  RunResult r = run("dual --semigroup nat-plus \"1 + 2\" \"1\" \"3 + 4\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "pass"));
  CHECK(contains(r.output, "= 1"));
}

TEST_CASE("convolution matches the bilinear product route") {
  CHECK(run("conv --semigroup nat-plus \"1 + 2\" \"1\"").output == "2 + 3\n");
  RunResult at = run("conv --semigroup nat-plus \"1 + 2\" \"1\" --at 3");
  CHECK(contains(at.output, "1"));
}

TEST_CASE("glued product routes through the join") {
  CHECK(run("ddl mul fig1 \"(0|2)\" \"(3|5)\"").output == "(0|7)\n");
  RunResult bad = run("ddl mul fig1 \"(3|1)\" \"(0|1)\"");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "ElementNotInCarrier"));
}

TEST_CASE("system checks pass on the demo and flag the defects") {
  RunResult good = run("ddl check fig1 --bound 4");
  CHECK(good.exit_code == 0);
  CHECK(contains(good.output, "verified-to-bound"));
  for (const char* which : {"defect-i", "defect-ii", "defect-iii"}) {
    RunResult bad = run(std::string("ddl check ") + which + " --bound 4");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "violated-with-witness"));
    CHECK(contains(bad.output, "fail"));
  }
}

TEST_CASE("fixture files go through the same check verb") {
  RunResult good = run(std::string("ddl check ") + FINDEC_FIXTURES_DIR +
                       "/good/chain-groups.ddl");
  CHECK(good.exit_code == 0);
  RunResult bad = run(std::string("ddl check ") + FINDEC_FIXTURES_DIR +
                      "/defects/non-morphic.ddl");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "morphism-multiplicative"));
}

TEST_CASE("peeling prints layers and terminal") {
  CHECK(run("peel zmul-4").output == "layer 0 (neutral 1): 1 3\nterminal: 0 2\n");
  CHECK(run("peel left-zero-2").output == "terminal: 0 1\n");
  RunResult verify = run("peel min-chain-3 --verify");
  CHECK(verify.exit_code == 0);
  CHECK(contains(verify.output, "unit-powers: pass"));
  RunResult rebuild = run("peel min-chain-3 --rebuild");
  CHECK(rebuild.exit_code == 0);
  CHECK(contains(rebuild.output, "tables match"));
  RunResult refuse = run("peel zmul-4 --rebuild");
  CHECK(refuse.exit_code == 1);
  CHECK(contains(refuse.output, "NonEmptyTerminal"));
}

TEST_CASE("series identities pass at the shipped tolerances") {
  RunResult chen = run("chen --u \"x0 x1\" --v \"x1\" --z 0.5 --N 2000");
  CHECK(chen.exit_code == 0);
  CHECK(contains(chen.output, "pass"));
  CHECK(contains(chen.output, "2*x0 x1 x1 + x1 x0 x1"));
  RunResult zeta = run("zeta \"2,1\"");
  CHECK(zeta.exit_code == 0);
  CHECK(contains(zeta.output, "zeta(2,1)"));
  RunResult st = run("zeta 2 --stuffle 2");
  CHECK(st.exit_code == 0);
  CHECK(contains(st.output, "2*(2,2) + (4)"));
  CHECK(contains(st.output, "pass"));
}

TEST_CASE("machine format emits parseable stable JSON") {
  RunResult r = run("qs stuffle \"2\" \"3\" --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["op"] == "qs");
  CHECK(j["result"]["text"] == "(2,3) + (3,2) + (5)");
  CHECK(j["result"]["terms"].size() == 3);

  auto z = nlohmann::json::parse(run("zeta 2 --N 100 --format json").output);
  CHECK(z["op"] == "zeta");
  CHECK(z["N"] == 100);
  CHECK(z["value"].is_number());

  auto d = nlohmann::json::parse(run("ddl check fig1 --bound 3 --format json").output);
  CHECK(d["pass"] == true);
  CHECK(d["criterion"]["conditions"].size() == 3);
}

TEST_CASE("usage errors exit 2 with a remedy, failures exit 1") {
  CHECK(run("nosuchverb").exit_code == 2);
  CHECK(run("qs").exit_code == 2);
  CHECK(run("qs nosuchkind \"2\" \"3\"").exit_code == 1);  // domain error, not usage
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("identical invocations produce byte-identical output") {
  for (const char* cmd : {"check --bound 1 --exec parallel", "qs stuffle \"1,2\" \"1\"",
                          "ddl check fig1 --bound 3 --format json"}) {
    CHECK(run(cmd).output == run(cmd).output);
  }
}

TEST_CASE("sweep runner prints per-kernel lines and honors the bound") {
  RunResult r = run("check --bound 1 --exec serial");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "seed 1, bound 1, serial"));
  CHECK(contains(r.output, "duality: pass"));
  CHECK(contains(r.output, "all checks passed"));
  RunResult zero = run("check --bound 0");
  CHECK(zero.exit_code == 0);
  CHECK(contains(zero.output, "warning: bound 0"));
}
