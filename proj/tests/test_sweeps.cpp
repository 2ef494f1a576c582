#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "findec/checks.hpp"
#include "findec/rational.hpp"

using namespace findec;

namespace {

// everything except wall time must be byte-identical across execution modes
void check_same(const CheckReport& a, const CheckReport& b) {
  CHECK(a.name == b.name);
  CHECK(a.cases == b.cases);
  CHECK(a.failure_count == b.failure_count);
  REQUIRE(a.failures.size() == b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) CHECK(a.failures[i] == b.failures[i]);
  CHECK(a.pass() == b.pass());
}

}  // namespace

TEST_CASE("execution mode names round trip") {
  CHECK(exec_from_name("serial") == Exec::serial);
  CHECK(exec_from_name("parallel") == Exec::parallel);
  CHECK(exec_name(Exec::parallel) == "parallel");
  CHECK_THROWS_AS(exec_from_name("gpu"), Error);
}

TEST_CASE("sweep failures keep case order and respect the cap") {
  auto fn = [](long long i) -> std::optional<std::string> {
    if (i % 3 == 0) return "case " + std::to_string(i) + " failed";
    if (i % 3 == 1) throw Error("Synthetic", "case " + std::to_string(i) + " threw");
    return std::nullopt;
  };
  CheckReport serial = run_sweep("synthetic", 100, Exec::serial, fn);
  CheckReport parallel = run_sweep("synthetic", 100, Exec::parallel, fn);
  CHECK(serial.cases == 100);
  CHECK(serial.failure_count == 67);
  CHECK(serial.failures.size() == 33);  // 32 earliest cases plus the overflow marker
  CHECK(serial.failures[0] == "case 0: case 0 failed");
  CHECK(serial.failures[1] == "case 1: Synthetic: case 1 threw");
  CHECK(serial.failures.back() == "... and 35 more");
  CHECK(!serial.pass());
  check_same(serial, parallel);
}

TEST_CASE("an empty sweep passes vacuously") {
  CheckReport rep = run_sweep("empty", 0, Exec::parallel,
                              [](long long) -> std::optional<std::string> { return "boom"; });
  CHECK(rep.cases == 0);
  CHECK(rep.pass());
}

TEST_CASE("every kernel reports identically in serial and parallel mode") {
  check_same(check_duality(3, 1, Exec::serial), check_duality(3, 1, Exec::parallel));
  check_same(check_coassociativity(3, Exec::serial), check_coassociativity(3, Exec::parallel));
  check_same(check_convolution(3, 1, Exec::serial), check_convolution(3, 1, Exec::parallel));
  check_same(check_qs_laws(3, Exec::serial), check_qs_laws(3, Exec::parallel));
  check_same(check_qs_oracle(3, Exec::serial), check_qs_oracle(3, Exec::parallel));
  check_same(check_chen(3, 500, 1e-8, Exec::serial), check_chen(3, 500, 1e-8, Exec::parallel));
  check_same(check_stuffle(4, 1000, Exec::serial), check_stuffle(4, 1000, Exec::parallel));
  check_same(check_quadrature(Exec::serial), check_quadrature(Exec::parallel));
  check_same(check_structure(Exec::serial), check_structure(Exec::parallel));
  check_same(check_rebuild(Exec::serial), check_rebuild(Exec::parallel));
  check_same(check_invertibility(3, Exec::serial), check_invertibility(3, Exec::parallel));
}

TEST_CASE("kernels are deterministic for a fixed seed") {
  check_same(check_duality(3, 42, Exec::parallel), check_duality(3, 42, Exec::parallel));
  CheckReport a = check_duality(3, 42, Exec::serial);
  CheckReport b = check_duality(3, 43, Exec::serial);
  CHECK(a.cases == b.cases);  // same shape, different random polynomials
}

TEST_CASE("small bounds pass across the whole suite") {
  for (const CheckReport& rep : check_all(2, Exec::parallel, 1)) {
    const std::string first = rep.failures.empty() ? std::string() : rep.failures[0];
    INFO(rep.name << ": " << first);
    CHECK(rep.pass());
    CHECK(rep.failure_count == 0);
  }
}

TEST_CASE("bound zero is a vacuous pass everywhere") {
  for (const CheckReport& rep : check_all(0, Exec::serial, 1)) {
    CHECK(rep.pass());
    CHECK(rep.cases == 0);
  }
}

TEST_CASE("shipped fixture files validate or are detected") {
  CheckReport rep = check_files(FINDEC_FIXTURES_DIR);
  const std::string first = rep.failures.empty() ? std::string() : rep.failures[0];
  INFO(first);
  CHECK(rep.pass());
  CHECK(rep.cases == 3);  // one good system, two seeded defects
}

TEST_CASE("a missing fixture directory is itself a failure") {
  CheckReport rep = check_files("/nonexistent-fixtures");
  CHECK(!rep.pass());
}

TEST_CASE("demo sweeps pass at a moderate bound") {
  CHECK(check_fig1(6).pass());
  CHECK(check_defects(6).pass());
}
