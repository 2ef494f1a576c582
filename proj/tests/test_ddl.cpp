#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <set>

#include "findec/ddl.hpp"

using namespace findec;

namespace {

std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  return "";
}

std::filesystem::path write_temp_ddl(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("graded naturals: products glue at the join") {
  DdlSystem sys = fig1_system();
  CHECK(sys.mul(sys.parse("(0|2)"), sys.parse("(3|5)")).str() == "(0|7)");
  CHECK(sys.mul(sys.parse("(2|3)"), sys.parse("(2|2)")).str() == "(2|5)");
  // the reversed index has no bottom, so the label-0 payload 0 is not neutral
  CHECK(sys.mul(sys.parse("(0|0)"), sys.parse("(2|5)")).str() == "(0|5)");
  CHECK(!sys.finite());
}

TEST_CASE("graded naturals: index order is reversed, join is min") {
  DdlSystem sys = fig1_system();
  CHECK(sys.index.leq("3", "1"));   // bigger integer sits below
  CHECK(!sys.index.leq("1", "3"));
  CHECK(sys.index.join("2", "5") == "2");
  CHECK(sys.index.labels_up_to(3) == std::vector<std::string>{"0", "1", "2", "3"});
}

TEST_CASE("graded naturals: morphisms keep the payload, fibers are points") {
  DdlSystem sys = fig1_system();
  CHECK(sys.morphism("1", "2", Element::natural(3)) == Element::natural(3));
  CHECK(sys.morphism("2", "2", Element::natural(5)) == Element::natural(5));
  CHECK(error_kind([&] { sys.morphism("2", "1", Element::natural(3)); }) == "MissingMorphism");
  CHECK(sys.fiber("0", "3", Element::natural(5), 10) == std::vector<Element>{Element::natural(5)});
  CHECK(sys.fiber("0", "3", Element::natural(2), 10).empty());  // 2 < 3 misses the component
  CHECK(sys.fiber_exact);
}

TEST_CASE("tagged elements are validated against their component") {
  DdlSystem sys = fig1_system();
  CHECK(sys.make("3", Element::natural(3)).str() == "(3|3)");
  CHECK(error_kind([&] { sys.make("3", Element::natural(1)); }) == "ElementNotInCarrier");
  CHECK(error_kind([&] { sys.parse("(3|1)"); }) == "ElementNotInCarrier");
  CHECK(error_kind([&] { sys.mul(sys.parse("(0|1)"), Element::natural(1)); }) ==
        "ElementNotInCarrier");
  CHECK(sys.parse(" (2|7) ").str() == "(2|7)");
}

TEST_CASE("ball enumerates tagged component balls in label order") {
  DdlSystem sys = fig1_system();
  auto ball = sys.ball(2);
  // labels 0,1,2 with payloads label..2 each
  std::vector<std::string> got;
  for (const Element& x : ball) got.push_back(x.str());
  CHECK(got == std::vector<std::string>{"(0|0)", "(0|1)", "(0|2)", "(1|1)", "(1|2)", "(2|2)"});
}

TEST_CASE("the demo system validates and meets the criterion at a bound") {
  DdlSystem sys = fig1_system();
  ValidationReport val = validate_system(sys, 5);
  CHECK(val.ok());
  CHECK(!val.exhaustive);
  CriterionReport crit = fd_criterion_check(sys, 5);
  CHECK(crit.all_verified());
  for (const auto& c : crit.conditions) CHECK(c.verdict == "verified-to-bound");
  CHECK(crit.conditions.size() == 3);
}

TEST_CASE("decomposition counts match the closed form (y - 2k + 1)^2") {
  DdlSystem sys = fig1_system();
  CHECK(brute_decompositions(sys, sys.parse("(0|4)"), 8).size() == 25);
  CHECK(brute_decompositions(sys, sys.parse("(1|4)"), 8).size() == 9);
  CHECK(brute_decompositions(sys, sys.parse("(2|4)"), 8).size() == 1);
  CHECK(brute_decompositions(sys, sys.parse("(3|4)"), 8).empty());  // y < 2k
  // every listed pair really multiplies back
  for (const auto& [u, v] : brute_decompositions(sys, sys.parse("(1|4)"), 8))
    CHECK(sys.mul(u, v).str() == "(1|4)");
}

TEST_CASE("each defect system fails exactly its own condition") {
  struct Expect {
    const char* which;
    const char* condition;
  };
  for (const Expect& e : {Expect{"i", "i"}, Expect{"ii", "ii"}, Expect{"iii", "iii"}}) {
    DdlSystem sys = defect_system(e.which);
    CriterionReport crit = fd_criterion_check(sys, 4);
    CHECK(!crit.all_verified());
    for (const auto& c : crit.conditions) {
      if (c.condition == e.condition) {
        CHECK(c.verdict == "violated-with-witness");
        CHECK(!c.witness.empty());
      } else {
        CHECK(c.verdict != "violated-with-witness");
      }
    }
  }
}

TEST_CASE("defect witness families multiply to the witness element") {
  for (const char* which : {"i", "ii", "iii"}) {
    DdlSystem sys = defect_system(which);
    Element z = defect_witness_element(which);
    auto family = defect_decomposition_family(which, 16);
    CHECK(family.size() >= 16);
    std::set<std::string> seen;
    for (const auto& [a, b] : family) {
      CHECK(sys.mul(a, b) == z);
      CHECK(seen.insert(a.str() + "&" + b.str()).second);
    }
  }
}

TEST_CASE("declared systems load from text") {
  auto path = write_temp_ddl("findec-test-chain.ddl", R"(# two-step chain
labels lo hi
component lo group:2
component hi group:2
leq lo hi
morphism hi lo 0:0 1:1
)");
  DdlSystem sys = load_ddl_file(path.string());
  CHECK(sys.finite());
  CHECK(sys.index.join("lo", "hi") == "hi");
  CHECK(sys.mul(sys.parse("(lo|1)"), sys.parse("(hi|1)")).str() == "(hi|0)");
  CHECK(validate_system(sys, 4).ok());
  CHECK(validate_system(sys, 4).exhaustive);
  CriterionReport crit = fd_criterion_check(sys, 4);
  CHECK(crit.all_verified());
  for (const auto& c : crit.conditions) CHECK(c.verdict == "verified-exhaustive");
  std::filesystem::remove(path);
}

TEST_CASE("declared systems imply reflexivity, transitivity, and self-maps") {
  auto path = write_temp_ddl("findec-test-transitive.ddl", R"(
labels a b c
component a trivial
component b trivial
component c trivial
leq a b
leq b c
morphism b a e:e
morphism c b e:e
morphism c a e:e
)");
  DdlSystem sys = load_ddl_file(path.string());
  CHECK(sys.index.leq("a", "c"));  // implied by transitive closure
  CHECK(sys.index.join("a", "a") == "a");
  CHECK(sys.morphism("a", "a", sys.component("a")->parse("e")).str() == "e");
  CHECK(validate_system(sys, 2).ok());
  std::filesystem::remove(path);
}

TEST_CASE("load errors carry the file position or the missing piece") {
  auto bad1 = write_temp_ddl("findec-test-bad1.ddl", "labels a a\n");
  CHECK(error_kind([&] { load_ddl_file(bad1.string()); }) == "BadDdl");
  auto bad2 = write_temp_ddl("findec-test-bad2.ddl", "labels a\nwhatever a\n");
  CHECK(error_kind([&] { load_ddl_file(bad2.string()); }) == "BadDdl");
  auto bad3 = write_temp_ddl("findec-test-bad3.ddl",
                             "labels a b\ncomponent a trivial\ncomponent b trivial\n");
  // incomparable pair without a declared join
  CHECK(error_kind([&] { load_ddl_file(bad3.string()); }) == "BadDdl");
  auto bad4 = write_temp_ddl("findec-test-bad4.ddl", "labels a\n");
  CHECK(error_kind([&] { load_ddl_file(bad4.string()); }) == "BadDdl");  // no component
  CHECK(error_kind([] { load_ddl_file("/nonexistent/x.ddl"); }) == "BadDdl");
  for (const char* n : {"findec-test-bad1.ddl", "findec-test-bad2.ddl", "findec-test-bad3.ddl",
                        "findec-test-bad4.ddl"})
    std::filesystem::remove(std::filesystem::temp_directory_path() / n);
}

TEST_CASE("a missing transition map surfaces when it is first used") {
  auto path = write_temp_ddl("findec-test-nomorph.ddl", R"(
labels a b
component a group:2
component b group:2
leq a b
)");
  DdlSystem sys = load_ddl_file(path.string());
  CHECK(error_kind([&] { sys.mul(sys.parse("(a|1)"), sys.parse("(b|1)")); }) ==
        "MissingMorphism");
  CHECK(!validate_system(sys, 2).ok());
  std::filesystem::remove(path);
}

TEST_CASE("spec resolution dispatches demos and files") {
  CHECK(resolve_ddl("fig1").name == "fig1");
  CHECK(resolve_ddl("defect-ii").name == "defect-ii");
  CHECK(error_kind([] { resolve_ddl("no/such/file.ddl"); }) == "BadDdl");
}
