#include "findec/analytic.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace findec {

namespace {

void require_letters(const Element& w) {
  for (const auto& a : w.as_word())
    if (a != "x0" && a != "x1")
      throw Error("LetterDomainMismatch", "analytic words use letters x0, x1; got '" + a + "'");
}

bool ends_in_x1(const Element& w) {
  const auto& v = w.as_word();
  return !v.empty() && v.back() == "x1";
}

bool pure_x0(const Element& w) {
  for (const auto& a : w.as_word())
    if (a != "x0") return false;
  return true;
}

double ipow_inv(long long n, long long s) {
  return std::pow(static_cast<double>(n), -static_cast<double>(s));
}

/// Truncated nested sum over N >= n1 > ... > nk >= 1 of
/// weight(n1) * prod ni^-si, one O(N) pass per level.
double nested_sum(const std::vector<long long>& s, long long N,
                  const std::function<double(long long)>& outer_weight) {
  const std::size_t k = s.size();
  std::vector<double> g(static_cast<std::size_t>(N) + 1, 1.0);  // g_{k+1}
  for (std::size_t j = k; j >= 2; --j) {
    std::vector<double> next(static_cast<std::size_t>(N) + 1, 0.0);
    double running = 0.0;
    for (long long b = 1; b <= N; ++b) {
      next[static_cast<std::size_t>(b)] = running;  // sum over m < b
      running += ipow_inv(b, s[j - 1]) * g[static_cast<std::size_t>(b)];
    }
    g = std::move(next);
  }
  double total = 0.0;
  for (long long n = 1; n <= N; ++n)
    total += outer_weight(n) * ipow_inv(n, s[0]) * g[static_cast<std::size_t>(n)];
  return total;
}

}  // namespace

bool is_analytic_word(const Element& w) {
  if (!w.is_word()) return false;
  for (const auto& a : w.as_word())
    if (a != "x0" && a != "x1") return false;
  const auto& v = w.as_word();
  return v.empty() || v.back() == "x1" || pure_x0(w);
}

Element word_to_composition(const Element& w) {
  require_letters(w);
  if (!w.as_word().empty() && !ends_in_x1(w))
    throw Error("DivergentWord", w.str() + " does not end in x1, so it has no composition");
  Element::Composition s;
  long long run = 0;
  for (const auto& a : w.as_word()) {
    if (a == "x0") {
      ++run;
    } else {
      s.push_back(run + 1);
      run = 0;
    }
  }
  return Element::composition(std::move(s));
}

Element composition_to_word(const Element& s) {
  Element::Word w;
  for (long long si : s.as_composition()) {
    if (si < 1) throw Error("ParseError", "composition entries must be >= 1");
    for (long long i = 1; i < si; ++i) w.push_back("x0");
    w.push_back("x1");
  }
  return Element::word(std::move(w));
}

double li_log_power(int n, double z) {
  double f = 1.0;
  for (int i = 1; i <= n; ++i) f *= std::log(z) / i;
  return f;
}

SeriesValue li(const Element& w, double z, long long N) {
  require_letters(w);
  if (!(z > 0.0 && z < 1.0))
    throw Error("DomainError", "series evaluation needs 0 < z < 1 (z = 1 is the zeta path)");
  if (N < 1) throw Error("DomainError", "truncation level must be >= 1");
  if (w.as_word().empty()) return {1.0, 0.0};
  if (pure_x0(w)) return {li_log_power(static_cast<int>(w.as_word().size()), z), 0.0};
  if (!ends_in_x1(w))
    throw Error("DivergentWord",
                w.str() + " neither ends in x1 nor is a pure x0 power; rejected, not regularized");
  const Element comp = word_to_composition(w);
  const auto& s = comp.as_composition();
  double value = nested_sum(s, N, [z](long long n) { return std::pow(z, static_cast<double>(n)); });
  // Every coefficient c_n of z^n satisfies c_n <= 1: the inner ordered sum is
  // at most the elementary symmetric bound H_{n-1}^{k-1}/(k-1)! and
  // n^-s1 H_{n-1}^{k-1}/(k-1)! peaks below 1 for all k. Hence the tail is at
  // most the geometric remainder.
  double bound = std::pow(z, static_cast<double>(N + 1)) / (1.0 - z);
  return {value, bound};
}

SeriesValue zeta(const Element& comp, long long N) {
  const auto& s = comp.as_composition();
  if (s.empty()) return {1.0, 0.0};
  for (long long si : s)
    if (si < 1) throw Error("DomainError", "zeta arguments must have entries >= 1");
  if (s[0] < 2)
    throw Error("DivergentComposition",
                comp.str() + " has leading entry 1; the series diverges and is rejected");
  if (N < 8) throw Error("DomainError", "zeta truncation level must be >= 8 for the tail bound");
  double value = nested_sum(s, N, [](long long) { return 1.0; });

  // Tail bound: the inner sum over n1 > n2 > ... is at most
  // (1 + ln n1)^m / m! with m = k-1 levels, so the tail is at most
  // (1/m!) * sum_{n>N} f(n) with f(x) = x^-s1 (1 + ln x)^m. The sum is
  // bounded by the integral plus twice the peak of the unimodal f:
  //   integral_N^inf f = m! N^(1-s1) (s1-1)^-(m+1) sum_{j<=m} a^j / j!,
  //   a = (s1-1)(1 + ln N), peak at x* = e^(m/s1 - 1).
  const double s1 = static_cast<double>(s[0]);
  const int m = static_cast<int>(s.size()) - 1;
  const double a = (s1 - 1.0) * (1.0 + std::log(static_cast<double>(N)));
  double series_part = 0.0, term = 1.0;
  for (int j = 0; j <= m; ++j) {
    series_part += term;
    term *= a / (j + 1);
  }
  double integral_over_mfact = std::pow(static_cast<double>(N), 1.0 - s1) *
                               std::pow(s1 - 1.0, -static_cast<double>(m + 1)) * series_part;
  auto f = [&](double x) { return std::pow(x, -s1) * std::pow(1.0 + std::log(x), m); };
  double xpeak = std::exp(m / s1 - 1.0);
  double fmax = f(static_cast<double>(N + 1));
  if (xpeak > static_cast<double>(N)) fmax = std::max(fmax, f(xpeak));
  double mfact = 1.0;
  for (int j = 2; j <= m; ++j) mfact *= j;
  double bound = integral_over_mfact + 2.0 * fmax / mfact;
  return {value, bound};
}

namespace {

IdentityReport identity_report(double lhs_val, double lhs_budget, const Polynomial& expansion,
                               const std::function<SeriesValue(const Element&)>& eval, double tol) {
  IdentityReport rep;
  rep.lhs = lhs_val;
  rep.tol = tol;
  rep.expansion = expansion;
  double rhs = 0.0, term_budget = 0.0;
  for (const auto& [t, c] : expansion.terms()) {
    SeriesValue sv = eval(t);
    double cd = std::abs(c.get_d());
    rhs += c.get_d() * sv.value;
    term_budget += cd * sv.bound;
  }
  rep.rhs = rhs;
  rep.budget = lhs_budget + term_budget;
  rep.pass = rep.diff() <= tol + rep.budget;
  return rep;
}

}  // namespace

IdentityReport chen_check(const Element& u, const Element& v, double z, long long N, double tol) {
  SeriesValue lu = li(u, z, N);
  SeriesValue lv = li(v, z, N);
  double lhs_budget =
      std::abs(lu.value) * lv.bound + std::abs(lv.value) * lu.bound + lu.bound * lv.bound;
  Polynomial expansion = quasi_shuffle(QsKind::shuffle, u, v);
  return identity_report(lu.value * lv.value, lhs_budget, expansion,
                         [&](const Element& t) { return li(t, z, N); }, tol);
}

IdentityReport stuffle_check(const Element& s, const Element& t, long long N, double tol) {
  SeriesValue zs = zeta(s, N);
  SeriesValue zt = zeta(t, N);
  double lhs_budget =
      std::abs(zs.value) * zt.bound + std::abs(zt.value) * zs.bound + zs.bound * zt.bound;
  Polynomial expansion = quasi_shuffle(QsKind::stuffle, s, t);
  return identity_report(zs.value * zt.value, lhs_budget, expansion,
                         [&](const Element& r) { return zeta(r, N); }, tol);
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fb, double fm, double eps, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, fm, flm, eps / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, fb, frm, eps / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
  double m = 0.5 * (a + b);
  return adaptive_simpson(f, a, b, f(a), f(b), f(m), eps, 40);
}

/// -log(1-t)/t continued through its removable singularity at 0.
double neglog1m_over_t(double t) {
  if (std::abs(t) < 1e-6) return 1.0 + t / 2.0 + t * t / 3.0;
  return -std::log1p(-t) / t;
}

}  // namespace

double quadrature_li(const Element& w, double z, double tol) {
  require_letters(w);
  if (!(z > 0.0 && z < 1.0)) throw Error("DomainError", "quadrature needs 0 < z < 1");
  const std::string key = w.str();
  if (key == "x1") return integrate([](double t) { return 1.0 / (1.0 - t); }, 0.0, z, tol);
  if (key == "x0 x1") return integrate(neglog1m_over_t, 0.0, z, tol);
  if (key == "x1 x1")
    return integrate([](double t) { return -std::log1p(-t) / (1.0 - t); }, 0.0, z, tol);
  throw Error("CapabilityMissing",
              "quadrature cross-check covers words of length <= 2 ending in x1; got " + key);
}

}  // namespace findec
