#include "findec/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "findec/analytic.hpp"
#include "findec/ddl.hpp"
#include "findec/polynomial.hpp"
#include "findec/quasi_shuffle.hpp"
#include "findec/semigroup.hpp"
#include "findec/structure.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace findec {

Exec exec_from_name(const std::string& name) {
  if (name == "serial") return Exec::serial;
  if (name == "parallel") return Exec::parallel;
  throw Error("UsageError", "unknown execution mode '" + name + "' (serial, parallel)");
}

std::string exec_name(Exec exec) { return exec == Exec::serial ? "serial" : "parallel"; }

namespace {
constexpr std::size_t kFailureCap = 32;
}

CheckReport run_sweep(const std::string& name, long long total, Exec exec,
                      const std::function<std::optional<std::string>(long long)>& fn) {
  CheckReport rep;
  rep.name = name;
  rep.cases = total;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<long long, std::string>> fails;

  auto run_one = [&fn](long long i) -> std::optional<std::string> {
    try {
      return fn(i);
    } catch (const Error& e) {
      return std::string(e.what());
    } catch (const std::exception& e) {
      return std::string(e.what());
    }
  };

#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      std::vector<std::pair<long long, std::string>> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (long long i = 0; i < total; ++i) {
        auto r = run_one(i);
        if (r) local.emplace_back(i, *r);
      }
#pragma omp critical
      fails.insert(fails.end(), local.begin(), local.end());
    }
    std::sort(fails.begin(), fails.end());
  } else
#endif
  {
    for (long long i = 0; i < total; ++i) {
      auto r = run_one(i);
      if (r) fails.emplace_back(i, *r);
    }
  }

  rep.failure_count = static_cast<long long>(fails.size());
  for (std::size_t i = 0; i < fails.size() && i < kFailureCap; ++i)
    rep.failures.push_back("case " + std::to_string(fails[i].first) + ": " + fails[i].second);
  if (fails.size() > kFailureCap)
    rep.failures.push_back("... and " + std::to_string(fails.size() - kFailureCap) + " more");
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---------------------------------------------------------------------------
// shared universes

namespace {

struct DeltaUniverse {
  SemigroupPtr S;
  std::vector<Element> U;
  std::vector<TensorPolynomial> delta;
  std::map<std::string, std::size_t> pos;
};

DeltaUniverse delta_universe(const SemigroupPtr& S, const std::vector<Element>& U) {
  DeltaUniverse uni;
  uni.S = S;
  uni.U = U;
  uni.delta.reserve(U.size());
  for (std::size_t i = 0; i < U.size(); ++i) {
    uni.delta.push_back(coproduct(*S, U[i]));
    uni.pos[U[i].str()] = i;
  }
  return uni;
}

std::vector<DeltaUniverse> duality_universes(long long weight_bound) {
  std::vector<DeltaUniverse> out;
  if (weight_bound <= 0) return out;
  auto nat = builtin("nat-plus");
  out.push_back(delta_universe(nat, nat->ball(weight_bound)));
  for (long long n = 2; n <= 12; ++n) {
    auto S = builtin("zmul-" + std::to_string(n));
    out.push_back(delta_universe(S, S->elements()));
  }
  auto t3 = builtin("t3");
  out.push_back(delta_universe(t3, t3->elements()));
  return out;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  int n = num(rng);
  if (n == 0) n = 1;
  Rational r(n, den(rng));
  r.canonicalize();
  return r;
}

Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<Element>& U) {
  std::uniform_int_distribution<std::size_t> pick(0, U.size() - 1);
  std::uniform_int_distribution<int> nterms(1, 3);
  Polynomial p;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) p.add_term(U[pick(rng)], random_rational(rng));
  return p;
}

std::vector<Element> words_over(QsKind kind, const std::vector<Element>& letters,
                                std::size_t max_len) {
  std::vector<Element> out{qs_unit(kind)};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (const Element& l : letters) out.push_back(qs_concat(out[i], l));
    level_begin = level_end;
  }
  return out;
}

std::vector<Element> qs_letters(QsKind kind) {
  switch (kind) {
    case QsKind::shuffle:
      return {Element::word({"x0"}), Element::word({"x1"})};
    case QsKind::stuffle:
      return {Element::composition({1}), Element::composition({2}), Element::composition({3})};
    case QsKind::diamond:
      return {Element::bicomposition({{1, 0}}), Element::bicomposition({{0, 1}}),
              Element::bicomposition({{1, 1}})};
    default:
      return {Element::monword({parse_multiindex("x1", false)}),
              Element::monword({parse_multiindex("x2", false)}),
              Element::monword({parse_multiindex("x1*x2", false)})};
  }
}

// grade that every product term must preserve additively
std::string qs_grade(QsKind kind, const Element& w) {
  switch (kind) {
    case QsKind::shuffle:
      return std::to_string(qs_length(w));
    case QsKind::stuffle: {
      long long s = 0;
      for (long long e : w.as_composition()) s += e;
      return std::to_string(s);
    }
    case QsKind::diamond: {
      long long a = 0, b = 0;
      for (const auto& [x, y] : w.as_bicomposition()) a += x, b += y;
      return std::to_string(a) + "," + std::to_string(b);
    }
    default: {
      long long s = 0;
      for (const Multiindex& m : w.as_monword()) s += m.weight();
      return std::to_string(s);
    }
  }
}

std::string qs_grade_sum(QsKind kind, const Element& u, const Element& v) {
  if (kind == QsKind::diamond) {
    auto split = [](const std::string& g) {
      auto c = g.find(',');
      return std::pair<long long, long long>{std::stoll(g.substr(0, c)),
                                             std::stoll(g.substr(c + 1))};
    };
    auto [a1, b1] = split(qs_grade(kind, u));
    auto [a2, b2] = split(qs_grade(kind, v));
    return std::to_string(a1 + a2) + "," + std::to_string(b1 + b2);
  }
  return std::to_string(std::stoll(qs_grade(kind, u)) + std::stoll(qs_grade(kind, v)));
}

Element bicomp_first_projection(const Element& w) {
  Element::Composition out;
  for (const auto& [a, b] : w.as_bicomposition()) out.push_back(a);
  return Element::composition(out);
}

std::vector<Element> convergent_compositions(long long max_weight) {
  std::vector<Element> out;
  Element::Composition cur;
  std::function<void(long long)> rec = [&](long long left) {
    if (!cur.empty()) out.push_back(Element::composition(cur));
    for (long long e = 1; e <= left; ++e) {
      if (cur.empty() && e < 2) continue;  // leading entry >= 2 keeps the series convergent
      cur.push_back(e);
      rec(left - e);
      cur.pop_back();
    }
  };
  rec(max_weight);
  std::sort(out.begin(), out.end(),
            [](const Element& a, const Element& b) { return canonical_less(a, b); });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// dualization sweeps

CheckReport check_duality(long long weight_bound, unsigned long long seed, Exec exec) {
  auto unis = duality_universes(weight_bound);
  struct Case {
    int uni;
    std::size_t i, j, k;
    bool random;
  };
  std::vector<Case> cases;
  for (int u = 0; u < static_cast<int>(unis.size()); ++u) {
    std::size_t n = unis[u].U.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) cases.push_back({u, i, j, k, false});
  }
  const long long random_cases = unis.empty() ? 0 : 200;
  for (long long t = 0; t < random_cases; ++t)
    cases.push_back({static_cast<int>(t % unis.size()), static_cast<std::size_t>(t), 0, 0, true});

  const long long total = static_cast<long long>(cases.size());
  return run_sweep(
      "duality", total, exec,
      [cases = std::move(cases), unis = std::move(unis),
       seed](long long idx) -> std::optional<std::string> {
        const Case& c = cases[static_cast<std::size_t>(idx)];
        const DeltaUniverse& uni = unis[static_cast<std::size_t>(c.uni)];
        if (c.random) {
          std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<unsigned long long>(c.i));
          Polynomial P = random_polynomial(rng, uni.U);
          Polynomial Q = random_polynomial(rng, uni.U);
          Polynomial R = random_polynomial(rng, uni.U);
          DualityReport rep = duality_check(*uni.S, P, Q, R);
          if (!rep.ok())
            return "duality fails over " + uni.S->name() + " for random P=" + P.str() +
                   ", Q=" + Q.str() + ", R=" + R.str() + ": " + rat_str(rep.lhs) +
                   " != " + rat_str(rep.rhs);
          return std::nullopt;
        }
        Polynomial P = Polynomial::single(uni.U[c.i]);
        Polynomial Q = Polynomial::single(uni.U[c.j]);
        Rational lhs = scalar_product(poly_mul(*uni.S, P, Q), Polynomial::single(uni.U[c.k]));
        Rational rhs = tensor_pairing(P, Q, uni.delta[c.k]);
        if (lhs != rhs)
          return "duality fails over " + uni.S->name() + " on (" + uni.U[c.i].str() + ", " +
                 uni.U[c.j].str() + ", " + uni.U[c.k].str() + "): " + rat_str(lhs) +
                 " != " + rat_str(rhs);
        return std::nullopt;
      });
}

CheckReport check_coassociativity(long long weight_bound, Exec exec) {
  auto unis = duality_universes(weight_bound);
  struct Case {
    int uni;
    std::size_t k;
  };
  std::vector<Case> cases;
  for (int u = 0; u < static_cast<int>(unis.size()); ++u)
    for (std::size_t k = 0; k < unis[u].U.size(); ++k) cases.push_back({u, k});

  const long long total = static_cast<long long>(cases.size());
  return run_sweep(
      "coassociativity", total, exec,
      [cases = std::move(cases), unis = std::move(unis)](long long idx)
          -> std::optional<std::string> {
        const Case& c = cases[static_cast<std::size_t>(idx)];
        const DeltaUniverse& uni = unis[static_cast<std::size_t>(c.uni)];
        const Element& m = uni.U[c.k];
        using Key = std::tuple<std::string, std::string, std::string>;
        std::map<Key, Rational> lhs, rhs;
        for (const auto& [pq, coeff] : uni.delta[c.k].terms()) {
          const auto& [p, q] = pq;
          auto ip = uni.pos.find(p.str());
          auto iq = uni.pos.find(q.str());
          if (ip == uni.pos.end() || iq == uni.pos.end())
            return "coproduct of " + m.str() + " over " + uni.S->name() +
                   " leaves the enumerated universe";
          for (const auto& [ab, c2] : uni.delta[ip->second].terms())
            lhs[{ab.first.str(), ab.second.str(), q.str()}] += coeff * c2;
          for (const auto& [ab, c2] : uni.delta[iq->second].terms())
            rhs[{p.str(), ab.first.str(), ab.second.str()}] += coeff * c2;
        }
        for (auto it = lhs.begin(); it != lhs.end();)
          it = (it->second == 0) ? lhs.erase(it) : std::next(it);
        for (auto it = rhs.begin(); it != rhs.end();)
          it = (it->second == 0) ? rhs.erase(it) : std::next(it);
        if (lhs != rhs)
          return "coproduct of " + m.str() + " over " + uni.S->name() + " is not coassociative";
        return std::nullopt;
      });
}

CheckReport check_convolution(long long weight_bound, unsigned long long seed, Exec exec) {
  struct Uni {
    SemigroupPtr S;
    std::vector<Element> U;
  };
  std::vector<Uni> unis;
  if (weight_bound > 0) {
    auto nat = builtin("nat-plus");
    unis.push_back({nat, nat->ball(weight_bound)});
    auto z12 = builtin("zmul-12");
    unis.push_back({z12, z12->elements()});
  }
  struct Case {
    int uni;
    std::size_t i, j;
    bool random;
  };
  std::vector<Case> cases;
  for (int u = 0; u < static_cast<int>(unis.size()); ++u) {
    std::size_t n = unis[u].U.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cases.push_back({u, i, j, false});
  }
  const long long random_cases = unis.empty() ? 0 : 100;
  for (long long t = 0; t < random_cases; ++t)
    cases.push_back({static_cast<int>(t % unis.size()), static_cast<std::size_t>(t), 0, true});

  const long long total = static_cast<long long>(cases.size());
  return run_sweep(
      "convolution", total, exec,
      [cases = std::move(cases), unis = std::move(unis),
       seed](long long idx) -> std::optional<std::string> {
        const Case& c = cases[static_cast<std::size_t>(idx)];
        const Uni& uni = unis[static_cast<std::size_t>(c.uni)];
        Polynomial f, g;
        if (c.random) {
          std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + static_cast<unsigned long long>(c.i));
          f = random_polynomial(rng, uni.U);
          g = random_polynomial(rng, uni.U);
        } else {
          f = Polynomial::single(uni.U[c.i]);
          g = Polynomial::single(uni.U[c.j]);
        }
        Polynomial via_decompose = convolve(*uni.S, f, g);
        Polynomial direct = poly_mul(*uni.S, f, g);
        if (!(via_decompose == direct))
          return "convolution over " + uni.S->name() + " of f=" + f.str() + ", g=" + g.str() +
                 " disagrees with the direct product: " + via_decompose.str() +
                 " != " + direct.str();
        for (const auto& [m, coeff] : direct.terms())
          if (convolve_at(*uni.S, f, g, m) != coeff)
            return "pointwise convolution over " + uni.S->name() + " at " + m.str() +
                   " disagrees with the direct product";
        return std::nullopt;
      });
}

// ---------------------------------------------------------------------------
// quasi-shuffle sweeps

CheckReport check_qs_laws(long long length_bound, Exec exec) {
  enum Sub { comm, assoc, unit, counts, grading, projection };
  struct Case {
    Sub sub;
    QsKind kind;
    Element u, v, w;
  };
  std::vector<Case> cases;
  const std::vector<QsKind> kinds{QsKind::shuffle, QsKind::stuffle, QsKind::diamond,
                                  QsKind::ldiag};
  const std::size_t L = length_bound > 0 ? static_cast<std::size_t>(length_bound) : 0;
  for (QsKind kind : kinds) {
    if (L == 0) break;
    const auto W = words_over(kind, qs_letters(kind), L);
    const Element one = qs_unit(kind);
    for (const Element& w : W) cases.push_back({unit, kind, w, one, one});
    for (const Element& u : W)
      for (const Element& v : W) {
        if (qs_length(u) + qs_length(v) > L) continue;
        cases.push_back({comm, kind, u, v, one});
        cases.push_back({counts, kind, u, v, one});
        cases.push_back({grading, kind, u, v, one});
        for (const Element& w : W) {
          if (qs_length(u) + qs_length(v) + qs_length(w) > L) continue;
          cases.push_back({assoc, kind, u, v, w});
        }
      }
  }
  if (L > 0) {
    // bicompositions with positive first coordinate project onto compositions
    const std::vector<Element> pos_letters{Element::bicomposition({{1, 0}}),
                                           Element::bicomposition({{1, 1}}),
                                           Element::bicomposition({{2, 1}})};
    const auto W = words_over(QsKind::diamond, pos_letters, L);
    const Element one = qs_unit(QsKind::diamond);
    for (const Element& u : W)
      for (const Element& v : W) {
        if (qs_length(u) + qs_length(v) > L) continue;
        cases.push_back({projection, QsKind::diamond, u, v, one});
      }
  }

  const long long total = static_cast<long long>(cases.size());
  return run_sweep(
      "qs-laws", total, exec,
      [cases = std::move(cases)](long long idx) -> std::optional<std::string> {
        const Case& c = cases[static_cast<std::size_t>(idx)];
        const std::string kind = qs_kind_name(c.kind);
        switch (c.sub) {
          case comm: {
            if (!(quasi_shuffle(c.kind, c.u, c.v) == quasi_shuffle(c.kind, c.v, c.u)))
              return kind + " product not commutative on (" + c.u.str() + ", " + c.v.str() + ")";
            return std::nullopt;
          }
          case assoc: {
            Polynomial lhs = quasi_shuffle(c.kind, quasi_shuffle(c.kind, c.u, c.v),
                                           Polynomial::single(c.w));
            Polynomial rhs = quasi_shuffle(c.kind, Polynomial::single(c.u),
                                           quasi_shuffle(c.kind, c.v, c.w));
            if (!(lhs == rhs))
              return kind + " product not associative on (" + c.u.str() + ", " + c.v.str() +
                     ", " + c.w.str() + ")";
            return std::nullopt;
          }
          case unit: {
            Polynomial left = quasi_shuffle(c.kind, c.v, c.u);
            Polynomial right = quasi_shuffle(c.kind, c.u, c.v);
            if (!(left == Polynomial::single(c.u)) || !(right == Polynomial::single(c.u)))
              return kind + " empty word is not neutral on " + c.u.str();
            return std::nullopt;
          }
          case counts: {
            const std::size_t p = qs_length(c.u), q = qs_length(c.v);
            const unsigned long long want = qs_tag_string_count(p, q, qs_has_merge(c.kind));
            Rational got = quasi_shuffle(c.kind, c.u, c.v).coeff_sum();
            if (got != Rational(static_cast<unsigned long>(want)))
              return kind + " coefficient sum on (" + c.u.str() + ", " + c.v.str() + ") is " +
                     rat_str(got) + ", expected " + std::to_string(want);
            return std::nullopt;
          }
          case grading: {
            const std::string want = qs_grade_sum(c.kind, c.u, c.v);
            const std::size_t p = qs_length(c.u), q = qs_length(c.v);
            const std::size_t lo = qs_has_merge(c.kind) ? std::max(p, q) : p + q;
            const Polynomial prod = quasi_shuffle(c.kind, c.u, c.v);
            for (const auto& [term, coeff] : prod.terms()) {
              if (qs_grade(c.kind, term) != want)
                return kind + " term " + term.str() + " of (" + c.u.str() + ") * (" + c.v.str() +
                       ") breaks the grading " + want;
              const std::size_t len = qs_length(term);
              if (len < lo || len > p + q)
                return kind + " term " + term.str() + " has length " + std::to_string(len) +
                       " outside [" + std::to_string(lo) + ", " + std::to_string(p + q) + "]";
            }
            return std::nullopt;
          }
          case projection: {
            Polynomial glued = quasi_shuffle(QsKind::diamond, c.u, c.v);
            Polynomial projected;
            for (const auto& [term, coeff] : glued.terms())
              projected.add_term(bicomp_first_projection(term), coeff);
            Polynomial direct = quasi_shuffle(QsKind::stuffle, bicomp_first_projection(c.u),
                                              bicomp_first_projection(c.v));
            if (!(projected == direct))
              return "first-coordinate projection of the bicomposition product differs from the "
                     "composition product on (" +
                     c.u.str() + ", " + c.v.str() + ")";
            return std::nullopt;
          }
        }
        return std::nullopt;
      });
}

CheckReport check_qs_oracle(long long length_bound, Exec exec) {
  struct Case {
    QsKind kind;
    Element u, v;
  };
  std::vector<Case> cases;
  const std::size_t L = length_bound > 0 ? static_cast<std::size_t>(length_bound) : 0;
  for (QsKind kind : {QsKind::shuffle, QsKind::stuffle, QsKind::diamond, QsKind::ldiag}) {
    if (L == 0) break;
    const auto W = words_over(kind, qs_letters(kind), L);
    for (const Element& u : W)
      for (const Element& v : W) {
        if (qs_length(u) + qs_length(v) > L) continue;
        cases.push_back({kind, u, v});
      }
  }
  const long long total = static_cast<long long>(cases.size());
  return run_sweep("qs-oracle", total, exec,
                   [cases = std::move(cases)](long long idx) -> std::optional<std::string> {
                     const Case& c = cases[static_cast<std::size_t>(idx)];
                     Polynomial fast = quasi_shuffle(c.kind, c.u, c.v);
                     Polynomial slow = qs_interleaving_oracle(c.kind, c.u, c.v);
                     if (!(fast == slow))
                       return qs_kind_name(c.kind) + " recursion and interleaving enumeration " +
                              "disagree on (" + c.u.str() + ", " + c.v.str() + "): " + fast.str() +
                              " != " + slow.str();
                     return std::nullopt;
                   });
}

// ---------------------------------------------------------------------------
// analytic sweeps

CheckReport check_chen(long long length_bound, long long N, double tol, Exec exec) {
  std::vector<Element> words{Element::word({})};
  if (length_bound > 0) {
    // series-representable words end in x1 (or are empty)
    const auto all = words_over(QsKind::shuffle, qs_letters(QsKind::shuffle),
                                static_cast<std::size_t>(length_bound));
    for (const Element& w : all)
      if (!w.as_word().empty() && w.as_word().back() == "x1") words.push_back(w);
  }
  struct Case {
    Element u, v;
  };
  std::vector<Case> cases;
  if (length_bound > 0)
    for (const Element& u : words)
      for (const Element& v : words) {
        if (qs_length(u) + qs_length(v) > static_cast<std::size_t>(length_bound)) continue;
        cases.push_back({u, v});
      }
  const long long total = static_cast<long long>(cases.size());
  return run_sweep("chen", total, exec,
                   [cases = std::move(cases), N, tol](long long idx)
                       -> std::optional<std::string> {
                     const Case& c = cases[static_cast<std::size_t>(idx)];
                     IdentityReport rep = chen_check(c.u, c.v, 0.5, N, tol);
                     if (!rep.pass)
                       return "product rule fails at z=0.5 for (" + c.u.str() + ", " + c.v.str() +
                              "): |" + std::to_string(rep.lhs) + " - " + std::to_string(rep.rhs) +
                              "| > " + std::to_string(rep.tol + rep.budget);
                     return std::nullopt;
                   });
}

CheckReport check_stuffle(long long weight_bound, long long N, Exec exec) {
  // 1e-10 absorbs float roundoff of the partial sums; the series truncation
  // itself is covered by the computed tail budgets
  constexpr double kRoundoff = 1e-10;
  struct Case {
    Element s, t;
    bool pinned;
  };
  std::vector<Case> cases;
  if (weight_bound > 0) {
    cases.push_back({Element::composition({2}), Element::composition({2}), true});
    const auto comps = convergent_compositions(weight_bound - 2);
    for (const Element& s : comps)
      for (const Element& t : comps) {
        long long ws = 0, wt = 0;
        for (long long e : s.as_composition()) ws += e;
        for (long long e : t.as_composition()) wt += e;
        if (ws + wt > weight_bound) continue;
        cases.push_back({s, t, false});
      }
  }
  const long long total = static_cast<long long>(cases.size());
  return run_sweep(
      "stuffle", total, exec,
      [cases = std::move(cases), N](long long idx) -> std::optional<std::string> {
        const Case& c = cases[static_cast<std::size_t>(idx)];
        IdentityReport rep = stuffle_check(c.s, c.t, N, kRoundoff);
        if (!rep.pass)
          return "zeta product rule fails for (" + c.s.str() + ", " + c.t.str() + "): |" +
                 std::to_string(rep.lhs) + " - " + std::to_string(rep.rhs) + "| > " +
                 std::to_string(rep.tol + rep.budget);
        if (c.pinned) {
          const double closed_form = std::pow(M_PI, 4) / 36.0;  // zeta(2)^2 exactly
          if (std::abs(rep.lhs - closed_form) > 1e-3)
            return "zeta(2)^2 at N=" + std::to_string(N) + " is " + std::to_string(rep.lhs) +
                   ", expected " + std::to_string(closed_form) + " within 1e-3";
          if (std::abs(rep.rhs - closed_form) > 1e-3)
            return "2*zeta(2,2) + zeta(4) at N=" + std::to_string(N) + " is " +
                   std::to_string(rep.rhs) + ", expected " + std::to_string(closed_form) +
                   " within 1e-3";
        }
        return std::nullopt;
      });
}

CheckReport check_quadrature(Exec exec) {
  struct Case {
    std::string word;
    double z;
  };
  std::vector<Case> cases;
  for (const std::string& w : {"x1", "x0 x1", "x1 x1"})
    for (double z : {0.25, 0.5, 0.75}) cases.push_back({w, z});
  const long long total = static_cast<long long>(cases.size());
  return run_sweep(
      "quadrature", total, exec,
      [cases = std::move(cases)](long long idx) -> std::optional<std::string> {
        const Case& c = cases[static_cast<std::size_t>(idx)];
        Element w = parse_word_elem(c.word);
        SeriesValue series = li(w, c.z, 4000);
        double quad = quadrature_li(w, c.z, 1e-10);
        if (std::abs(series.value - quad) > 1e-7 + series.bound)
          return "series and quadrature values of li(" + c.word + ", z=" + std::to_string(c.z) +
                 ") differ: " + std::to_string(series.value) + " vs " + std::to_string(quad);
        return std::nullopt;
      });
}

// ---------------------------------------------------------------------------
// glued-system sweeps

CheckReport check_fig1(long long bound) {
  CheckReport rep;
  rep.name = "ddl-fig1";
  const auto t0 = std::chrono::steady_clock::now();
  if (bound <= 0) {
    rep.seconds = 0;
    return rep;
  }
  auto fail = [&rep](const std::string& msg) {
    ++rep.failure_count;
    if (rep.failures.size() < kFailureCap) rep.failures.push_back(msg);
  };
  try {
    DdlSystem sys = fig1_system();

    ValidationReport val = validate_system(sys, bound);
    for (const CheckItem& item : val.items) {
      rep.cases += item.cases;
      if (!item.pass) fail("validation item " + item.name + ": " + item.witness);
    }

    CriterionReport crit = fd_criterion_check(sys, bound);
    for (const CriterionVerdict& v : crit.conditions) {
      rep.cases += v.cases;
      if (v.verdict != "verified-to-bound")
        fail("criterion condition (" + v.condition + ") is " + v.verdict +
             (v.witness.empty() ? "" : ": " + v.witness));
    }

    // pinned products and morphism values
    ++rep.cases;
    Element prod = sys.mul(sys.parse("(0|2)"), sys.parse("(3|5)"));
    if (prod.str() != "(0|7)") fail("(0|2) * (3|5) = " + prod.str() + ", expected (0|7)");
    ++rep.cases;
    Element moved = sys.morphism("1", "2", Element::natural(3));
    if (!(moved == Element::natural(3))) fail("morphism 1 <- 2 moved the payload of 3");
    ++rep.cases;
    // products glue at the join; the reversed index has no bottom, so (0|0) is not neutral
    Element top = sys.parse("(0|0)");
    Element probe = sys.parse("(2|5)");
    if (sys.mul(top, probe).str() != "(0|5)" || sys.mul(probe, top).str() != "(0|5)")
      fail("(0|0) * (2|5) = " + sys.mul(top, probe).str() + ", expected (0|5)");
    ++rep.cases;

    // every decomposition count against the closed form (y-2k+1)^2
    std::map<std::string, long long> counts;
    const auto U = sys.ball(bound);
    for (const Element& a : U)
      for (const Element& b : U) ++counts[sys.mul(a, b).str()];
    for (long long k = 0; k <= bound; ++k)
      for (long long y = k; y <= bound; ++y) {
        ++rep.cases;
        const std::string z = "(" + std::to_string(k) + "|" + std::to_string(y) + ")";
        long long want = 0;
        if (y >= 2 * k) {
          long long m = y - 2 * k + 1;
          want = m * m;
        }
        auto it = counts.find(z);
        long long got = it == counts.end() ? 0 : it->second;
        if (got != want)
          fail("decomposition count of " + z + " is " + std::to_string(got) + ", closed form " +
               std::to_string(want));
      }
  } catch (const Error& e) {
    fail(e.what());
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

CheckReport check_defects(long long bound) {
  CheckReport rep;
  rep.name = "ddl-defects";
  const auto t0 = std::chrono::steady_clock::now();
  if (bound <= 0) {
    rep.seconds = 0;
    return rep;
  }
  auto fail = [&rep](const std::string& msg) {
    ++rep.failure_count;
    if (rep.failures.size() < kFailureCap) rep.failures.push_back(msg);
  };
  for (const std::string which : {"i", "ii", "iii"}) {
    try {
      DdlSystem sys = defect_system(which);

      // well-formed as a system: the defect sits in the criterion, not the axioms
      ValidationReport val = validate_system(sys, std::min<long long>(bound, 4));
      for (const CheckItem& item : val.items) {
        rep.cases += item.cases;
        if (!item.pass)
          fail("defect-" + which + " validation item " + item.name + ": " + item.witness);
      }

      CriterionReport crit = fd_criterion_check(sys, bound);
      for (const CriterionVerdict& v : crit.conditions) {
        rep.cases += v.cases;
        if (v.condition == which) {
          if (v.verdict != "violated-with-witness")
            fail("defect-" + which + " condition (" + v.condition + ") came back " + v.verdict +
                 ", expected a violation");
          if (v.witness.empty()) fail("defect-" + which + " violation carries no witness");
        } else if (v.verdict == "violated-with-witness") {
          fail("defect-" + which + " condition (" + v.condition + ") reports a spurious " +
               "violation: " + v.witness);
        }
      }

      // constructive witness: bound-many distinct factorizations of one element
      Element z = defect_witness_element(which);
      auto family = defect_decomposition_family(which, bound);
      ++rep.cases;
      if (static_cast<long long>(family.size()) < bound)
        fail("defect-" + which + " witness family has " + std::to_string(family.size()) +
             " pairs, expected at least " + std::to_string(bound));
      std::set<std::string> seen;
      for (const auto& [a, b] : family) {
        ++rep.cases;
        Element prod = sys.mul(a, b);
        if (!(prod == z))
          fail("defect-" + which + " witness pair (" + a.str() + ", " + b.str() +
               ") multiplies to " + prod.str() + ", not " + z.str());
        if (!seen.insert(a.str() + "&" + b.str()).second)
          fail("defect-" + which + " witness family repeats (" + a.str() + ", " + b.str() + ")");
      }
    } catch (const Error& e) {
      fail(std::string("defect-") + which + ": " + e.what());
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

CheckReport check_files(const std::string& fixtures_dir) {
  CheckReport rep;
  rep.name = "ddl-files";
  const auto t0 = std::chrono::steady_clock::now();
  auto fail = [&rep](const std::string& msg) {
    ++rep.failure_count;
    if (rep.failures.size() < kFailureCap) rep.failures.push_back(msg);
  };
  namespace fs = std::filesystem;
  auto list = [](const fs::path& dir) {
    std::vector<fs::path> out;
    if (fs::is_directory(dir))
      for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".ddl") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto good = list(fs::path(fixtures_dir) / "good");
  const auto bad = list(fs::path(fixtures_dir) / "defects");
  if (good.empty() && bad.empty()) {
    fail("no .ddl fixtures under '" + fixtures_dir + "'");
  }
  for (const auto& p : good) {
    ++rep.cases;
    try {
      DdlSystem sys = load_ddl_file(p.string());
      ValidationReport val = validate_system(sys, 8);
      for (const CheckItem& item : val.items)
        if (!item.pass) fail(p.filename().string() + " fails " + item.name + ": " + item.witness);
      for (const CriterionVerdict& v : fd_criterion_check(sys, 8).conditions)
        if (v.verdict == "violated-with-witness")
          fail(p.filename().string() + " violates condition (" + v.condition + "): " + v.witness);
    } catch (const Error& e) {
      fail(p.filename().string() + ": " + e.what());
    }
  }
  for (const auto& p : bad) {
    ++rep.cases;
    try {
      DdlSystem sys = load_ddl_file(p.string());
      bool detected = false;
      std::string first;
      ValidationReport val = validate_system(sys, 8);
      for (const CheckItem& item : val.items)
        if (!item.pass) {
          detected = true;
          first = item.name + ": " + item.witness;
          break;
        }
      if (!detected)
        for (const CriterionVerdict& v : fd_criterion_check(sys, 8).conditions)
          if (v.verdict == "violated-with-witness") {
            detected = true;
            first = "condition (" + v.condition + "): " + v.witness;
            break;
          }
      if (!detected) fail(p.filename().string() + " passed validation but sits under defects/");
    } catch (const Error&) {
      // refusing to load is also a detection
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---------------------------------------------------------------------------
// structure sweeps

CheckReport check_structure(Exec exec) {
  std::vector<std::string> fixtures;
  for (long long n = 2; n <= 12; ++n) fixtures.push_back("zmul-" + std::to_string(n));
  for (long long n = 1; n <= 6; ++n) fixtures.push_back("min-chain-" + std::to_string(n));
  fixtures.push_back("t3");
  fixtures.push_back("left-zero-2");
  fixtures.push_back("left-zero-3");
  const long long total = static_cast<long long>(fixtures.size());
  return run_sweep("structure", total, exec,
                   [fixtures = std::move(fixtures)](long long idx)
                       -> std::optional<std::string> {
                     const std::string& name = fixtures[static_cast<std::size_t>(idx)];
                     StructureReport rep = verify_structure_theorem(builtin(name));
                     for (const CheckItem& item : rep.items)
                       if (!item.pass)
                         return name + " fails " + item.name + ": " + item.witness;
                     return std::nullopt;
                   });
}

CheckReport check_rebuild(Exec exec) {
  struct Case {
    std::string fixture;
    bool expect_refusal;
  };
  std::vector<Case> cases;
  for (long long n = 1; n <= 6; ++n)
    cases.push_back({"min-chain-" + std::to_string(n), false});
  for (const std::string g : {"trivial", "group:2", "group:3", "group:4", "group:2x2", "group:5",
                              "group:6", "group:7", "group:8", "group:4x2", "group:2x2x2"})
    cases.push_back({g, false});
  for (const std::string g : {"zmul-4", "t3", "left-zero-2"}) cases.push_back({g, true});

  const long long total = static_cast<long long>(cases.size());
  return run_sweep(
      "rebuild", total, exec,
      [cases = std::move(cases)](long long idx) -> std::optional<std::string> {
        const Case& c = cases[static_cast<std::size_t>(idx)];
        if (c.expect_refusal) {
          try {
            rebuild_as_ddl(builtin(c.fixture));
          } catch (const Error& e) {
            if (e.kind == "NonEmptyTerminal") return std::nullopt;
            return c.fixture + " was refused for the wrong reason: " + e.what();
          }
          return c.fixture + " has a nonempty terminal but was rebuilt without refusal";
        }
        RebuildResult R = rebuild_as_ddl(builtin(c.fixture));
        if (!R.tables_match)
          return c.fixture + " round trip changed the multiplication table";
        ValidationReport val = validate_system(R.system, 4);
        for (const CheckItem& item : val.items)
          if (!item.pass)
            return c.fixture + " rebuilt system fails " + item.name + ": " + item.witness;
        return std::nullopt;
      });
}

CheckReport check_invertibility(long long bound, Exec exec) {
  struct Case {
    SemigroupPtr S;
    Element x;
    bool expect_error;  // handles without neutral element must be rejected
  };
  std::vector<Case> cases;
  if (bound > 0) {
    for (const std::string name : {"zmul-5", "zmul-12", "group:6", "t3", "min-chain-3"}) {
      auto S = builtin(name);
      for (const Element& x : S->elements()) cases.push_back({S, x, false});
    }
    for (const std::string name : {"nat-monoid", "mon"}) {
      auto S = builtin(name);
      for (const Element& x : S->ball(bound)) cases.push_back({S, x, false});
    }
    auto nat = builtin("nat-plus");
    cases.push_back({nat, Element::natural(3), true});
  }
  const long long total = static_cast<long long>(cases.size());
  return run_sweep(
      "invertibility", total, exec,
      [cases = std::move(cases)](long long idx) -> std::optional<std::string> {
        const Case& c = cases[static_cast<std::size_t>(idx)];
        if (c.expect_error) {
          try {
            is_invertible(*c.S, c.x);
          } catch (const Error&) {
            return std::nullopt;
          }
          return c.S->name() + " has no neutral element yet is_invertible answered";
        }
        const Element e = *c.S->neutral();
        bool brute = false;
        if (c.S->finite()) {
          for (const Element& y : c.S->elements())
            if (mul(*c.S, c.x, y) == e && mul(*c.S, y, c.x) == e) {
              brute = true;
              break;
            }
        } else {
          brute = (c.x == e);  // the only unit of both infinite fixtures
        }
        bool via_factorization = is_invertible(*c.S, c.x);
        if (via_factorization != brute)
          return c.S->name() + ": factorization route says " +
                 (via_factorization ? "unit" : "non-unit") + " for " + c.x.str() +
                 ", brute force disagrees";
        if (via_factorization) {
          Element inv = inverse(*c.S, c.x);
          if (!(mul(*c.S, c.x, inv) == e) || !(mul(*c.S, inv, c.x) == e))
            return c.S->name() + ": claimed inverse of " + c.x.str() + " fails: " + inv.str();
        }
        return std::nullopt;
      });
}

std::vector<CheckReport> check_all(long long bound, Exec exec, unsigned long long seed,
                                   const std::string& fixtures_dir) {
  std::vector<CheckReport> out;
  out.push_back(check_duality(bound, seed, exec));
  out.push_back(check_coassociativity(bound, exec));
  out.push_back(check_convolution(bound, seed, exec));
  out.push_back(check_qs_laws(std::min<long long>(bound, 6), exec));
  out.push_back(check_qs_oracle(std::min<long long>(bound, 5), exec));
  out.push_back(check_chen(std::min<long long>(bound, 5), 2000, 1e-8, exec));
  out.push_back(check_stuffle(std::min<long long>(bound, 6), 10000, exec));
  if (bound > 0) out.push_back(check_quadrature(exec));
  out.push_back(check_fig1(bound));
  out.push_back(check_defects(bound));
  if (!fixtures_dir.empty()) out.push_back(check_files(fixtures_dir));
  if (bound > 0) {
    out.push_back(check_structure(exec));
    out.push_back(check_rebuild(exec));
  }
  out.push_back(check_invertibility(bound, exec));
  return out;
}

}  // namespace findec
