#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "findec/quasi_shuffle.hpp"

using namespace findec;

namespace {

Polynomial qs(QsKind k, const std::string& u, const std::string& v) {
  return quasi_shuffle(k, qs_parse_word(k, u), qs_parse_word(k, v));
}

std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  return "";
}

}  // namespace

TEST_CASE("kind names round trip") {
  for (QsKind k : {QsKind::shuffle, QsKind::stuffle, QsKind::diamond, QsKind::ldiag})
    CHECK(qs_kind_from_name(qs_kind_name(k)) == k);
  CHECK_THROWS_AS(qs_kind_from_name("nosuch"), Error);
  CHECK(!qs_has_merge(QsKind::shuffle));
  CHECK(qs_has_merge(QsKind::stuffle));
}

TEST_CASE("word parsing and splitting per kind") {
  Element w = qs_parse_word(QsKind::shuffle, "x0 x1 x1");
  CHECK(qs_length(w) == 3);
  CHECK(qs_letter_words(w).size() == 3);
  CHECK(qs_concat(qs_letter_words(w)[0], qs_letter_words(w)[1]).str() == "x0 x1");
  CHECK(qs_parse_word(QsKind::stuffle, "2,3").str() == "(2,3)");
  CHECK(qs_parse_word(QsKind::diamond, "2/1,3/0").str() == "(2/1,3/0)");
  CHECK(qs_parse_word(QsKind::ldiag, "[x1^2][x1]").str() == "[x1^2][x1]");
  CHECK(qs_length(qs_unit(QsKind::stuffle)) == 0);
}

TEST_CASE("letter domain is enforced") {
  Element comp = Element::composition({2});
  CHECK(error_kind([&] { quasi_shuffle(QsKind::shuffle, comp, comp); }) ==
        "LetterDomainMismatch");
  CHECK(error_kind([&] {
          qs_merge_letters(QsKind::shuffle, Element::word({"a"}), Element::word({"b"}));
        }) == "LetterDomainMismatch");
}

TEST_CASE("letter merges per kind") {
  CHECK(qs_merge_letters(QsKind::stuffle, Element::composition({2}), Element::composition({3}))
            .str() == "(5)");
  CHECK(qs_merge_letters(QsKind::diamond, Element::bicomposition({{2, 1}}),
                         Element::bicomposition({{3, 0}}))
            .str() == "(5/1)");
  CHECK(qs_merge_letters(QsKind::ldiag, parse_monword_elem("[x1]"), parse_monword_elem("[x2]"))
            .str() == "[x1*x2]");
}

TEST_CASE("pinned shuffle product") {
  CHECK(qs(QsKind::shuffle, "x0", "x1 x1").str() == "x0 x1 x1 + x1 x0 x1 + x1 x1 x0");
  CHECK(qs(QsKind::shuffle, "x0", "x1").str() == "x0 x1 + x1 x0");
  // repeated letters collapse into multiplicity
  CHECK(qs(QsKind::shuffle, "x1", "x1").str() == "2*x1 x1");
}

TEST_CASE("pinned stuffle products") {
  CHECK(qs(QsKind::stuffle, "2", "3").str() == "(2,3) + (3,2) + (5)");
  CHECK(qs(QsKind::stuffle, "1", "1,1").str() == "3*(1,1,1) + (1,2) + (2,1)");
  CHECK(qs(QsKind::stuffle, "2", "2").str() == "2*(2,2) + (4)");
}

TEST_CASE("pinned diamond product merges both coordinates") {
  CHECK(qs(QsKind::diamond, "1/0", "0/1").str() == "(0/1,1/0) + (1/0,0/1) + (1/1)");
}

TEST_CASE("pinned monomial-word product merges by monomial multiplication") {
  CHECK(qs(QsKind::ldiag, "[x1]", "[x1]").str() == "2*[x1][x1] + [x1^2]");
  CHECK(qs(QsKind::ldiag, "[x1]", "[x2]").str() == "[x1*x2] + [x1][x2] + [x2][x1]");
}

TEST_CASE("empty word is the two-sided unit") {
  for (QsKind k : {QsKind::shuffle, QsKind::stuffle, QsKind::diamond, QsKind::ldiag}) {
    Element one = qs_unit(k);
    Element w = k == QsKind::shuffle     ? qs_parse_word(k, "x0 x1")
                : k == QsKind::stuffle   ? qs_parse_word(k, "2,1")
                : k == QsKind::diamond   ? qs_parse_word(k, "1/0,0/1")
                                         : qs_parse_word(k, "[x1][x2]");
    CHECK(quasi_shuffle(k, one, w) == Polynomial::single(w));
    CHECK(quasi_shuffle(k, w, one) == Polynomial::single(w));
  }
}

TEST_CASE("commutativity and associativity on sampled words") {
  struct Sample {
    QsKind k;
    const char* u;
    const char* v;
    const char* w;
  };
  const Sample samples[] = {
      {QsKind::shuffle, "x0", "x1", "x0 x1"},
      {QsKind::stuffle, "1", "2", "1,1"},
      {QsKind::diamond, "1/0", "0/1", "1/1"},
      {QsKind::ldiag, "[x1]", "[x2]", "[x1][x1]"},
  };
  for (const Sample& s : samples) {
    Element u = qs_parse_word(s.k, s.u), v = qs_parse_word(s.k, s.v), w = qs_parse_word(s.k, s.w);
    CHECK(quasi_shuffle(s.k, u, v) == quasi_shuffle(s.k, v, u));
    Polynomial lhs = quasi_shuffle(s.k, quasi_shuffle(s.k, u, v), Polynomial::single(w));
    Polynomial rhs = quasi_shuffle(s.k, Polynomial::single(u), quasi_shuffle(s.k, v, w));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("interleaving counts with and without merges") {
  CHECK(qs_tag_string_count(0, 0, false) == 1);
  CHECK(qs_tag_string_count(3, 0, true) == 1);
  CHECK(qs_tag_string_count(2, 2, false) == 6);    // binomial(4,2)
  CHECK(qs_tag_string_count(2, 2, true) == 13);    // 6 + 6 + 1
  CHECK(qs_tag_string_count(3, 2, false) == 10);
  CHECK(qs_tag_string_count(3, 2, true) == 10 + 12 + 3);
  // the coefficient sum of a product counts the interleavings
  CHECK(qs(QsKind::stuffle, "1,1", "1,1").coeff_sum() == Rational(13));
  CHECK(qs(QsKind::shuffle, "x0 x0", "x1 x1").coeff_sum() == Rational(6));
}

TEST_CASE("recursion matches the direct interleaving enumeration") {
  struct Pair {
    QsKind k;
    const char* u;
    const char* v;
  };
  const Pair pairs[] = {
      {QsKind::shuffle, "x0 x1", "x1 x0"},
      {QsKind::shuffle, "x0", "x0 x0 x1"},
      {QsKind::stuffle, "2,1", "1,1"},
      {QsKind::stuffle, "3", "1,2"},
      {QsKind::diamond, "1/0,0/1", "1/1"},
      {QsKind::diamond, "2/1", "1/0,0/2"},
      {QsKind::ldiag, "[x1][x2]", "[x1]"},
      {QsKind::ldiag, "[x1^2]", "[x1][x1]"},
  };
  for (const Pair& p : pairs) {
    Element u = qs_parse_word(p.k, p.u), v = qs_parse_word(p.k, p.v);
    CHECK(quasi_shuffle(p.k, u, v) == qs_interleaving_oracle(p.k, u, v));
  }
}

TEST_CASE("bilinear extension distributes over sums") {
  Polynomial P = Polynomial::single(qs_parse_word(QsKind::stuffle, "1"), Rational(2));
  P.add_term(qs_parse_word(QsKind::stuffle, "2"), Rational(1));
  Polynomial Q = Polynomial::single(qs_parse_word(QsKind::stuffle, "1"), Rational(1, 2));
  Polynomial direct = quasi_shuffle(QsKind::stuffle, P, Q);
  Polynomial expanded = qs(QsKind::stuffle, "1", "1").scaled(Rational(1)) +
                        qs(QsKind::stuffle, "2", "1").scaled(Rational(1, 2));
  CHECK(direct == expanded);
}
