#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "findec/semigroup.hpp"

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

}  // namespace

TEST_CASE("positive naturals: no neutral, additive factorizations") {
  auto S = builtin("nat-plus");
  CHECK(!S->neutral().has_value());
  CHECK(!S->finite());
  CHECK(S->finite_decomposition());
  auto pairs = decompose(*S, Element::natural(4));
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].first == Element::natural(1));
  CHECK(pairs[0].second == Element::natural(3));
  CHECK(pairs[1] == std::make_pair(Element::natural(2), Element::natural(2)));
  CHECK(decompose(*S, Element::natural(1)).empty());
  verify_decomposer(*S, Element::natural(6), 12);
  CHECK(S->ball(3) == std::vector<Element>{Element::natural(1), Element::natural(2),
                                           Element::natural(3)});
}

TEST_CASE("nat monoid adds the neutral and its trivial factorizations") {
  auto S = builtin("nat-monoid");
  REQUIRE(S->neutral().has_value());
  CHECK(*S->neutral() == Element::natural(0));
  auto pairs = decompose(*S, Element::natural(2));
  CHECK(pairs.size() == 3);  // (0,2), (1,1), (2,0)
  CHECK(decompose(*S, Element::natural(0)).size() == 1);
  CHECK(units(*S) == std::vector<Element>{Element::natural(0)});
}

TEST_CASE("membership is checked before multiplying") {
  auto S = builtin("nat-plus");
  CHECK(error_kind([&] { mul(*S, Element::natural(0), Element::natural(1)); }) ==
        "ElementNotInCarrier");
  CHECK(error_kind([&] { decompose(*S, Element::word({"a"})); }) == "ElementNotInCarrier");
  CHECK(mul(*S, Element::natural(2), Element::natural(3)) == Element::natural(5));
}

TEST_CASE("monomials under multiplication") {
  auto mon = builtin("mon");
  REQUIRE(mon->neutral().has_value());
  CHECK(mon->neutral()->str() == "1");
  Element x1sq = mon->parse("x1^2");
  auto pairs = decompose(*mon, x1sq);
  CHECK(pairs.size() == 3);  // (1, x1^2), (x1, x1), (x1^2, 1)
  verify_decomposer(*mon, x1sq, 4);

  auto pos = builtin("mon-plus");
  CHECK(!pos->neutral().has_value());
  CHECK(decompose(*pos, pos->parse("x1")).empty());
  CHECK(decompose(*pos, pos->parse("x1*x2")).size() == 2);
}

TEST_CASE("laurent monomials refuse to decompose") {
  auto S = builtin("mon-laurent");
  CHECK(S->contains(S->parse("x1^-2")));
  CHECK(!S->finite_decomposition());
  CHECK(error_kind([&] { decompose(*S, S->parse("x1")); }) == "NonFiniteDecomposition");
  CHECK(mul(*S, S->parse("x1"), S->parse("x1^-1")) == S->parse("1"));
}

TEST_CASE("residues mod 4 under multiplication") {
  auto S = builtin("zmul-4");
  REQUIRE(S->neutral().has_value());
  CHECK(S->neutral()->str() == "1");
  CHECK(S->elements().size() == 4);
  CHECK(is_invertible(*S, S->parse("3")));
  CHECK(inverse(*S, S->parse("3")) == S->parse("3"));
  CHECK(!is_invertible(*S, S->parse("2")));
  CHECK(error_kind([&] { inverse(*S, S->parse("2")); }) == "NotInvertible");
  auto u = units(*S);
  REQUIRE(u.size() == 2);
  CHECK(u[0].str() == "1");
  CHECK(u[1].str() == "3");
  for (const Element& x : S->elements()) verify_decomposer(*S, x);
}

TEST_CASE("invertibility needs a neutral element") {
  auto S = builtin("nat-plus");
  CHECK(error_kind([&] { is_invertible(*S, Element::natural(3)); }) == "NoNeutral");
  CHECK(error_kind([&] { inverse(*S, Element::natural(3)); }) == "NotInvertible");
  CHECK(units(*S).empty());
}

TEST_CASE("abelian group handles") {
  auto S = builtin("group:6");
  CHECK(S->elements().size() == 6);
  CHECK(S->neutral()->str() == "0");
  CHECK(inverse(*S, S->parse("1")) == S->parse("5"));
  CHECK(units(*S).size() == 6);

  auto K = builtin("group:2x2");
  CHECK(K->elements().size() == 4);
  for (const Element& x : K->elements()) CHECK(mul(*K, x, x) == *K->neutral());
}

TEST_CASE("transformation monoid on three points") {
  auto S = builtin("t3");
  CHECK(S->elements().size() == 27);
  REQUIRE(S->neutral().has_value());
  CHECK(S->neutral()->str() == "012");
  CHECK(units(*S).size() == 6);  // the bijections
  // left-to-right composition: (a then b)
  Element a = S->parse("120");
  CHECK(mul(*S, a, a) == S->parse("201"));
  CHECK(inverse(*S, a) == S->parse("201"));
  CHECK(!is_invertible(*S, S->parse("002")));
}

TEST_CASE("chain under min and left-zero law") {
  auto C = builtin("min-chain-3");
  CHECK(*C->neutral() == C->parse("2"));
  CHECK(mul(*C, C->parse("1"), C->parse("2")) == C->parse("1"));
  CHECK(units(*C) == std::vector<Element>{C->parse("2")});

  auto L = builtin("left-zero-2");
  CHECK(!L->neutral().has_value());
  auto e = L->elements();
  REQUIRE(e.size() == 2);
  CHECK(mul(*L, e[0], e[1]) == e[0]);
  CHECK(mul(*L, e[1], e[0]) == e[1]);
}

TEST_CASE("unknown builtin specs are rejected with the offending name") {
  CHECK(error_kind([] { builtin("nosuch"); }) == "UnknownSemigroup");
  CHECK(error_kind([] { builtin("zmul-1000"); }) == "UnknownSemigroup");
  CHECK(error_kind([] { builtin("group:"); }) == "UnknownSemigroup");
}

TEST_CASE("explicit tables reject non-associative data") {
  // (a*a)*b = b*b = a  but  a*(a*b) = a*a = b
  CHECK(error_kind([] {
          FiniteTableSemigroup("bad", {"a", "b"}, {{1, 0}, {0, 0}});
        }) == "NotAssociative");
  CHECK(error_kind([] { FiniteTableSemigroup("dup", {"a", "a"}, {{0, 0}, {0, 0}}); }) ==
        "BadTable");
  CHECK(error_kind([] { FiniteTableSemigroup("shape", {"a"}, {}); }) == "BadTable");
}

TEST_CASE("cayley table render and load round trip") {
  auto S = builtin("zmul-6");
  std::string text = render_cayley_table(*S, S->elements());
  auto path = std::filesystem::temp_directory_path() / "findec-test-zmul6.txt";
  {
    std::ofstream out(path);
    out << "# round trip fixture\n" << text;
  }
  auto L = load_cayley_table(path.string());
  CHECK(L->size() == 6);
  for (const Element& a : S->elements())
    for (const Element& b : S->elements())
      CHECK(mul(*L, L->parse(a.str()), L->parse(b.str())).str() == mul(*S, a, b).str());
  CHECK(render_cayley_table(*L, L->elements()) == text);
  std::filesystem::remove(path);
}

TEST_CASE("subsemigroups share the parent law and verify closure") {
  auto S = builtin("zmul-4");
  SubSemigroup sub("units", S, {S->parse("1"), S->parse("3")});
  CHECK(sub.neutral()->str() == "1");
  CHECK(mul(sub, sub.parse("3"), sub.parse("3")) == sub.parse("1"));
  CHECK(error_kind([&] { SubSemigroup("open", S, {S->parse("2"), S->parse("3")}); }) ==
        "NotClosed");
  CHECK(error_kind([&] { sub.parse("2"); }) == "ElementNotInCarrier");
}

TEST_CASE("decomposer completeness scan covers the factor range") {
  // every factor pair of 9 lies inside ball(9)
  auto S = builtin("nat-plus");
  verify_decomposer(*S, Element::natural(9), 9);
}
