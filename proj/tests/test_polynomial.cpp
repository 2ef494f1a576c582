#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "findec/polynomial.hpp"

using namespace findec;

namespace {

Element nat(unsigned long long n) { return Element::natural(n); }

std::string error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind;
  }
  return "";
}

}  // namespace

TEST_CASE("polynomial arithmetic keeps the canonical form") {
  Polynomial p = Polynomial::single(nat(2), Rational(3, 2));
  p.add_term(nat(1), Rational(1));
  CHECK(p.str() == "1 + 3/2*2");
  p.add_term(nat(2), Rational(-3, 2));  // cancels to zero and vanishes
  CHECK(p.str() == "1");
  CHECK(p.support_size() == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).str() == "0");
  CHECK(p.scaled(Rational(0)).is_zero());
  CHECK((p + p).coeff(nat(1)) == Rational(2));
  CHECK(p.coeff(nat(9)) == Rational(0));
}

TEST_CASE("polynomial parse round trip") {
  auto S = builtin("nat-plus");
  for (const char* text : {"1", "3/2*1 + 2", "1 - 2", "2 - 1/3*4 + 7"}) {
    Polynomial p = parse_polynomial(*S, text);
    CHECK(parse_polynomial(*S, p.str()) == p);
  }
  CHECK(parse_polynomial(*S, "2 + 2 - 2").str() == "2");
  CHECK(parse_polynomial(*S, "0*1").str() == "0");
  // element syntax is the component's: monomial '*' is not a coefficient star
  auto mon = builtin("mon");
  CHECK(parse_polynomial(*mon, "x1^2*x3 + 2*x1").str() == "2*x1 + x1^2*x3");
}

TEST_CASE("product of polynomials is the bilinear extension") {
  auto S = builtin("nat-plus");
  Polynomial p = parse_polynomial(*S, "1 + 2");
  Polynomial q = parse_polynomial(*S, "3/2*1");
  CHECK(poly_mul(*S, p, q).str() == "3/2*2 + 3/2*3");
  CHECK(poly_mul(*S, Polynomial(), p).is_zero());
}

TEST_CASE("scalar product pairs the coefficient maps") {
  Polynomial a = Polynomial::single(nat(1), Rational(2));
  a.add_term(nat(2), Rational(5));
  Polynomial b = Polynomial::single(nat(2), Rational(1, 5));
  b.add_term(nat(3), Rational(7));
  CHECK(scalar_product(a, b) == Rational(1));
  CHECK(scalar_product(a, Polynomial()) == Rational(0));
}

TEST_CASE("coproduct lists ordered factorizations") {
  auto S = builtin("nat-plus");
  TensorPolynomial t = coproduct(*S, nat(3));
  CHECK(t.str() == "(1,2) + (2,1)");
  CHECK(t.coeff(nat(1), nat(2)) == Rational(1));
  CHECK(t.coeff(nat(2), nat(2)) == Rational(0));

  auto M = builtin("nat-monoid");
  CHECK(coproduct(*M, nat(2)).terms().size() == 3);
  CHECK(coproduct(*M, parse_polynomial(*M, "2*0")).coeff(nat(0), nat(0)) == Rational(2));
}

TEST_CASE("coproduct needs the finite decomposition property") {
  auto S = builtin("mon-laurent");
  CHECK(error_kind([&] { coproduct(*S, S->parse("x1")); }) == "NonFiniteDecomposition");
}

TEST_CASE("duality identity on pinned data") {
  auto S = builtin("nat-plus");
  DualityReport rep = duality_check(*S, parse_polynomial(*S, "1 + 2"),
                                    parse_polynomial(*S, "1"), parse_polynomial(*S, "3 + 4"));
  CHECK(rep.ok());
  CHECK(rep.lhs == Rational(1));

  // <(1+2)*(1+2) | 2+4> picks up 2 = 1*1 once and 4 = 2*2 once
  Polynomial pq = parse_polynomial(*S, "1 + 2");
  DualityReport rep2 = duality_check(*S, pq, pq, parse_polynomial(*S, "2 + 4"));
  CHECK(rep2.ok());
  CHECK(rep2.lhs == Rational(2));
}

TEST_CASE("duality identity on every basis triple of a finite handle") {
  auto S = builtin("zmul-6");
  for (const Element& p : S->elements())
    for (const Element& q : S->elements())
      for (const Element& r : S->elements()) {
        DualityReport rep = duality_check(*S, Polynomial::single(p), Polynomial::single(q),
                                          Polynomial::single(r));
        CHECK(rep.ok());
      }
}

TEST_CASE("coassociativity of the coproduct on additive naturals") {
  auto S = builtin("nat-plus");
  // both nested coproducts must list the ordered 3-part splittings
  for (unsigned long long n = 2; n <= 7; ++n) {
    std::map<std::string, Rational> left, right;
    const TensorPolynomial outer = coproduct(*S, nat(n));
    for (const auto& [pq, c] : outer.terms()) {
      const TensorPolynomial lhs = coproduct(*S, pq.first);
      const TensorPolynomial rhs = coproduct(*S, pq.second);
      for (const auto& [ab, d] : lhs.terms())
        left[ab.first.str() + "|" + ab.second.str() + "|" + pq.second.str()] += c * d;
      for (const auto& [ab, d] : rhs.terms())
        right[pq.first.str() + "|" + ab.first.str() + "|" + ab.second.str()] += c * d;
    }
    CHECK(left == right);
    // ordered splittings of n into 3 positive parts: (n-1 choose 2)
    Rational total(0);
    for (const auto& [k, v] : left) total += v;
    CHECK(total == Rational(static_cast<unsigned long>((n - 1) * (n - 2) / 2)));
  }
}

TEST_CASE("convolution through the decomposer matches the direct product") {
  auto S = builtin("nat-monoid");
  Polynomial f = parse_polynomial(*S, "1 + 1/2*2");
  Polynomial g = parse_polynomial(*S, "0 - 3");
  CHECK(convolve(*S, f, g) == poly_mul(*S, f, g));
  for (unsigned long long m = 0; m <= 6; ++m)
    CHECK(convolve_at(*S, f, g, nat(m)) == poly_mul(*S, f, g).coeff(nat(m)));

  auto Z = builtin("zmul-12");
  Polynomial a = Polynomial::single(Z->parse("3"), Rational(2));
  a.add_term(Z->parse("5"), Rational(-1, 3));
  Polynomial b = Polynomial::single(Z->parse("4"));
  b.add_term(Z->parse("7"), Rational(6));
  CHECK(convolve(*Z, a, b) == poly_mul(*Z, a, b));
}

TEST_CASE("tensor pairing is the product of the two pairings") {
  Polynomial P = Polynomial::single(nat(1), Rational(2));
  Polynomial Q = Polynomial::single(nat(2), Rational(3));
  TensorPolynomial T;
  T.add_term(nat(1), nat(2), Rational(5));
  T.add_term(nat(2), nat(1), Rational(7));  // unmatched: Q misses 1
  CHECK(tensor_pairing(P, Q, T) == Rational(30));
}

TEST_CASE("polynomial parser rejects junk") {
  auto S = builtin("nat-plus");
  CHECK(error_kind([&] { parse_polynomial(*S, "1 +"); }) == "ParseError");
  CHECK(error_kind([&] { parse_polynomial(*S, ""); }) == "ParseError");
  CHECK(error_kind([&] { parse_polynomial(*S, "1 ++ 2"); }) == "ParseError");
}
