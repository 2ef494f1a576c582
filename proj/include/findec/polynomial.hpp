#pragma once

#include <map>
#include <string>
#include <utility>

#include "findec/element.hpp"
#include "findec/rational.hpp"
#include "findec/semigroup.hpp"

namespace findec {

struct CanonicalLess {
  bool operator()(const Element& a, const Element& b) const { return canonical_less(a, b); }
};

struct PairCanonicalLess {
  bool operator()(const std::pair<Element, Element>& a,
                  const std::pair<Element, Element>& b) const {
    if (canonical_less(a.first, b.first)) return true;
    if (canonical_less(b.first, a.first)) return false;
    return canonical_less(a.second, b.second);
  }
};

/// Finite rational-coefficient combination of semigroup elements. Terms are
/// kept in canonical (serialization) order and zero coefficients are dropped,
/// so equal polynomials have identical term maps and identical text.
class Polynomial {
 public:
  using Terms = std::map<Element, Rational, CanonicalLess>;

  Polynomial() = default;
  static Polynomial single(const Element& m, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Rational coeff(const Element& m) const;
  Rational coeff_sum() const;

  void add_term(const Element& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial scaled(const Rational& c) const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  /// "3/2*a + b - 2*c" with terms in canonical order; "0" when empty.
  std::string str() const;

 private:
  Terms terms_;
};

/// Finite rational combination of ordered pairs p (x) q, the tensor square
/// counterpart of Polynomial. Pair terms print as "(p,q)".
class TensorPolynomial {
 public:
  using Terms = std::map<std::pair<Element, Element>, Rational, PairCanonicalLess>;

  TensorPolynomial() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Element& p, const Element& q) const;

  void add_term(const Element& p, const Element& q, const Rational& c);
  TensorPolynomial& operator+=(const TensorPolynomial& other);
  bool operator==(const TensorPolynomial& other) const { return terms_ == other.terms_; }

  std::string str() const;

 private:
  Terms terms_;
};

/// Bilinear extension of the semigroup law to polynomials.
Polynomial poly_mul(const Semigroup& S, const Polynomial& a, const Polynomial& b);

/// Orthonormal-basis pairing: sum over common support of coefficient products.
Rational scalar_product(const Polynomial& a, const Polynomial& b);

/// Delta(m) = sum of p (x) q over all ordered factorizations p*q = m.
/// Requires the finite decomposition property.
TensorPolynomial coproduct(const Semigroup& S, const Element& m);
TensorPolynomial coproduct(const Semigroup& S, const Polynomial& P);

/// <P (x) Q | T> with <P (x) Q | p (x) q> = <P|p><Q|q>.
Rational tensor_pairing(const Polynomial& P, const Polynomial& Q, const TensorPolynomial& T);

/// Both sides of <P*Q | R> = <P (x) Q | Delta(R)>, computed independently:
/// the left through the product, the right through the coproduct.
struct DualityReport {
  Rational lhs;
  Rational rhs;
  bool ok() const { return lhs == rhs; }
};
DualityReport duality_check(const Semigroup& S, const Polynomial& P, const Polynomial& Q,
                            const Polynomial& R);

/// Convolution of finitely supported functionals (represented by their
/// coefficient polynomials): (f star g)(m) = sum over p*q = m of f(p) g(q).
/// Goes through the decomposer, not through poly_mul, so the two routes stay
/// independent.
Rational convolve_at(const Semigroup& S, const Polynomial& f, const Polynomial& g,
                     const Element& m);

/// Full convolution on the (finite) set of candidate products of the two
/// supports; each coefficient still comes from the decomposer.
Polynomial convolve(const Semigroup& S, const Polynomial& f, const Polynomial& g);

/// Parses "3/2*m1 + m2 - 2*m3"; element syntax is delegated to S.parse.
/// A leading factor is read as a coefficient only when it is a valid
/// rational, so monomial texts like "x1^2*x3" keep their '*'.
Polynomial parse_polynomial(const Semigroup& S, const std::string& text);

}  // namespace findec
