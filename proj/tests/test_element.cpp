#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "findec/element.hpp"

using namespace findec;

TEST_CASE("multiindex construction drops zero exponents") {
  Multiindex m(std::map<int, long long>{{1, 2}, {2, 0}, {3, 1}});
  CHECK(m.exps().size() == 2);
  CHECK(m.str() == "x1^2*x3");
  CHECK(m.degree() == 3);
  CHECK(m.weight() == 1 * 2 + 3 * 1);
  CHECK(Multiindex().empty());
  CHECK(Multiindex().str() == "1");
}

TEST_CASE("multiindex arithmetic") {
  Multiindex a = parse_multiindex("x1^2*x2", false);
  Multiindex b = parse_multiindex("x1*x2", false);
  CHECK(a.plus(b).str() == "x1^3*x2^2");
  CHECK(a.dominates(b));
  CHECK(!b.dominates(a));
  CHECK(a.minus(b).str() == "x1");
  CHECK(a.plus(Multiindex()) == a);
}

TEST_CASE("laurent multiindex parses negative exponents") {
  Multiindex m = parse_multiindex("x1^-2*x3", true);
  CHECK(m.str() == "x1^-2*x3");
  CHECK(m.degree() == -1);
  CHECK(m.weight() == 1 * 2 + 3 * 1);
  CHECK_THROWS_AS(parse_multiindex("x1^-2", false), Error);
  // x1 * x1^-1 collapses to the empty monomial
  Multiindex inv = parse_multiindex("x1^-1", true);
  CHECK(parse_multiindex("x1", true).plus(inv).empty());
}

TEST_CASE("multiindex parse round trip") {
  for (const char* s : {"1", "x1", "x2^3", "x1^2*x3", "x1*x2*x3"}) {
    CHECK(parse_multiindex(s, false).str() == s);
  }
  CHECK_THROWS_AS(parse_multiindex("", false), Error);
  CHECK_THROWS_AS(parse_multiindex("x0", false), Error);
  CHECK_THROWS_AS(parse_multiindex("y1", false), Error);
  CHECK_THROWS_AS(parse_multiindex("x1^0*", false), Error);
}

TEST_CASE("element payload kinds and canonical text") {
  CHECK(Element::natural(5).str() == "5");
  CHECK(Element::word({"x0", "x1"}).str() == "x0 x1");
  CHECK(Element::word({}).str() == "1");
  CHECK(Element::composition({2, 3}).str() == "(2,3)");
  CHECK(Element::composition({}).str() == "()");
  CHECK(Element::bicomposition({{2, 1}, {3, 0}}).str() == "(2/1,3/0)");
  CHECK(Element::monword({parse_multiindex("x1^2", false), parse_multiindex("x1", false)}).str() ==
        "[x1^2][x1]");
  CHECK(Element::monword({}).str() == "1");
  CHECK(Element::table(0, "abc").str() == "abc");
  CHECK(Element::ddl_pair("3", Element::natural(7)).str() == "(3|7)");
}

TEST_CASE("element equality is payload equality through the text form") {
  CHECK(Element::natural(2) == Element::natural(2));
  CHECK(Element::natural(2) != Element::natural(3));
  CHECK(Element::composition({1, 2}) != Element::composition({2, 1}));
  Element nested = Element::ddl_pair("0", Element::composition({1}));
  CHECK(nested == Element::ddl_pair("0", Element::composition({1})));
}

TEST_CASE("payload accessors reject the wrong alternative") {
  Element n = Element::natural(1);
  CHECK_THROWS_AS(n.as_word(), Error);
  CHECK_THROWS_AS(n.as_composition(), Error);
  CHECK_THROWS_AS(Element::word({"a"}).as_natural(), Error);
  CHECK(n.as_natural() == 1);
}

TEST_CASE("canonical order is the lexicographic order of the text form") {
  CHECK(canonical_less(Element::composition({1, 2}), Element::composition({2, 1})));
  CHECK(!canonical_less(Element::natural(3), Element::natural(3)));
  // string order, not numeric order
  CHECK(canonical_less(Element::natural(10), Element::natural(2)));
}

TEST_CASE("context parsers round trip the canonical forms") {
  CHECK(parse_natural_elem("12") == Element::natural(12));
  CHECK(parse_word_elem("x0 x1 x0") == Element::word({"x0", "x1", "x0"}));
  CHECK(parse_word_elem("1") == Element::word({}));
  CHECK(parse_composition_elem("(2,3)") == Element::composition({2, 3}));
  CHECK(parse_composition_elem("2,3") == Element::composition({2, 3}));  // CLI shorthand
  CHECK(parse_bicomposition_elem("(2/1,3/0)") == Element::bicomposition({{2, 1}, {3, 0}}));
  CHECK(parse_bicomposition_elem("2/1,3/0") == Element::bicomposition({{2, 1}, {3, 0}}));
  Element mw = parse_monword_elem("[x1^2][x1]");
  CHECK(mw.as_monword().size() == 2);
  CHECK(mw.str() == "[x1^2][x1]");
}

TEST_CASE("context parsers reject malformed input") {
  CHECK_THROWS_AS(parse_natural_elem("x"), Error);
  CHECK_THROWS_AS(parse_natural_elem("-1"), Error);
  CHECK_THROWS_AS(parse_composition_elem("(2,0)"), Error);   // entries are >= 1
  CHECK_THROWS_AS(parse_composition_elem("(2,,3)"), Error);
  CHECK_THROWS_AS(parse_bicomposition_elem("(0/0)"), Error);  // letters are nonzero pairs
  CHECK_THROWS_AS(parse_monword_elem("[x1^2"), Error);
  CHECK_THROWS_AS(parse_monword_elem("[1]"), Error);          // letters are nonempty monomials
}

TEST_CASE("every printed element reparses to an equal value") {
  const Element samples[] = {
      Element::natural(0),
      Element::natural(41),
      Element::word({"x0", "x1", "x1"}),
      Element::word({}),
      Element::composition({4, 1, 2}),
      Element::bicomposition({{1, 0}, {0, 2}}),
      Element::monword({parse_multiindex("x2^3", false)}),
  };
  CHECK(parse_natural_elem(samples[0].str()) == samples[0]);
  CHECK(parse_natural_elem(samples[1].str()) == samples[1]);
  CHECK(parse_word_elem(samples[2].str()) == samples[2]);
  CHECK(parse_word_elem(samples[3].str()) == samples[3]);
  CHECK(parse_composition_elem(samples[4].str()) == samples[4]);
  CHECK(parse_bicomposition_elem(samples[5].str()) == samples[5]);
  CHECK(parse_monword_elem(samples[6].str()) == samples[6]);
}
