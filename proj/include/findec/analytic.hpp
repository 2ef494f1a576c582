#pragma once

#include <string>

#include "findec/polynomial.hpp"
#include "findec/quasi_shuffle.hpp"

namespace findec {

/// Words over the letters x0, x1. A word is evaluable when it is empty, a
/// pure power of x0 (closed form), or ends in x1 (convergent nested series
/// for 0 < z < 1).
bool is_analytic_word(const Element& w);

/// x0^(s1-1) x1 x0^(s2-1) x1 ... <-> (s1, ..., sk); the word must end in x1.
Element word_to_composition(const Element& w);
Element composition_to_word(const Element& s);

struct SeriesValue {
  double value;
  double bound;  // true bound on the truncation error (not on double rounding)
};

/// Nested power series sum_{N >= n1 > ... > nk >= 1} z^n1 / prod ni^si for
/// the word's composition, evaluated by one O(k N) sweep; pure x0^n words use
/// the closed form log(z)^n / n!, the empty word is 1. Requires 0 < z < 1.
SeriesValue li(const Element& w, double z, long long N);

/// log(z)^n / n!.
double li_log_power(int n, double z);

/// Truncated multiple zeta value sum_{N >= n1 > ... > nk >= 1} prod ni^-si.
/// Requires s1 >= 2 (convergence) and N >= 8 (bound validity).
SeriesValue zeta(const Element& s, long long N);

/// Product-vs-expansion comparison: lhs = A * B, rhs = sum of c_t * term_t
/// where the expansion is the relevant product of words. The budget combines
/// the operand bounds with the term bounds; pass means
/// |lhs - rhs| <= tol + budget.
struct IdentityReport {
  double lhs = 0;
  double rhs = 0;
  double budget = 0;
  double tol = 0;
  bool pass = false;
  Polynomial expansion;
  double diff() const { return lhs > rhs ? lhs - rhs : rhs - lhs; }
};

/// Product rule for iterated series: li(u) li(v) = sum over the shuffle
/// expansion of u and v. u, v must be evaluable words.
IdentityReport chen_check(const Element& u, const Element& v, double z, long long N, double tol);

/// zeta(s) zeta(t) = sum over the stuffle expansion; s, t compositions with
/// leading entry >= 2.
IdentityReport stuffle_check(const Element& s, const Element& t, long long N, double tol);

/// Independent numeric route for words of length <= 2: iterated integrals
/// evaluated by adaptive Simpson quadrature. Covers x1, x0 x1, x1 x1.
double quadrature_li(const Element& w, double z, double tol);

}  // namespace findec
