#include "findec/polynomial.hpp"

#include <cctype>

namespace findec {

Polynomial Polynomial::single(const Element& m, const Rational& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coeff(const Element& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coeff_sum() const {
  Rational s(0);
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

void Polynomial::add_term(const Element& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, Rational(-c));
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r = *this;
  r -= other;
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.add_term(m, Rational(k * c));
  return r;
}

namespace {

/// Shared term formatting: "" or "- " prefixes handled by the caller loop.
void append_term(std::string& out, bool first, const Rational& c, const std::string& body) {
  Rational mag = c < 0 ? Rational(-c) : c;
  if (first) {
    if (c < 0) out += '-';
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mag == 1)
    out += body;
  else
    out += rat_str(mag) + "*" + body;
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    append_term(out, first, c, m.str());
    first = false;
  }
  return out;
}

Rational TensorPolynomial::coeff(const Element& p, const Element& q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorPolynomial::add_term(const Element& p, const Element& q, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(std::make_pair(p, q), c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

TensorPolynomial& TensorPolynomial::operator+=(const TensorPolynomial& other) {
  for (const auto& [pq, c] : other.terms_) add_term(pq.first, pq.second, c);
  return *this;
}

std::string TensorPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [pq, c] : terms_) {
    append_term(out, first, c, "(" + pq.first.str() + "," + pq.second.str() + ")");
    first = false;
  }
  return out;
}

Polynomial poly_mul(const Semigroup& S, const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [m, c] : a.terms())
    for (const auto& [n, d] : b.terms()) r.add_term(mul(S, m, n), Rational(c * d));
  return r;
}

Rational scalar_product(const Polynomial& a, const Polynomial& b) {
  Rational s(0);
  // walk the smaller support
  const Polynomial& small = a.support_size() <= b.support_size() ? a : b;
  const Polynomial& large = a.support_size() <= b.support_size() ? b : a;
  for (const auto& [m, c] : small.terms()) s += c * large.coeff(m);
  return s;
}

TensorPolynomial coproduct(const Semigroup& S, const Element& m) {
  TensorPolynomial t;
  for (const auto& [p, q] : decompose(S, m)) t.add_term(p, q, Rational(1));
  return t;
}

TensorPolynomial coproduct(const Semigroup& S, const Polynomial& P) {
  TensorPolynomial t;
  for (const auto& [m, c] : P.terms())
    for (const auto& [p, q] : decompose(S, m)) t.add_term(p, q, c);
  return t;
}

Rational tensor_pairing(const Polynomial& P, const Polynomial& Q, const TensorPolynomial& T) {
  Rational s(0);
  for (const auto& [pq, c] : T.terms()) {
    Rational cp = P.coeff(pq.first);
    if (cp == 0) continue;
    Rational cq = Q.coeff(pq.second);
    if (cq == 0) continue;
    s += c * cp * cq;
  }
  return s;
}

DualityReport duality_check(const Semigroup& S, const Polynomial& P, const Polynomial& Q,
                            const Polynomial& R) {
  DualityReport rep;
  rep.lhs = scalar_product(poly_mul(S, P, Q), R);
  Rational rhs(0);
  for (const auto& [m, c] : R.terms()) rhs += c * tensor_pairing(P, Q, coproduct(S, m));
  rep.rhs = rhs;
  return rep;
}

Rational convolve_at(const Semigroup& S, const Polynomial& f, const Polynomial& g,
                     const Element& m) {
  Rational s(0);
  for (const auto& [p, q] : decompose(S, m)) {
    Rational fp = f.coeff(p);
    if (fp == 0) continue;
    s += fp * g.coeff(q);
  }
  return s;
}

Polynomial convolve(const Semigroup& S, const Polynomial& f, const Polynomial& g) {
  // Candidate support: products of the two supports. The coefficients are
  // recomputed through the decomposer so this stays a second, independent
  // route to the bilinear product.
  Polynomial r;
  std::map<Element, bool, CanonicalLess> seen;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      Element m = mul(S, a, b);
      if (seen.emplace(m, true).second) r.add_term(m, convolve_at(S, f, g, m));
    }
  return r;
}

Polynomial parse_polynomial(const Semigroup& S, const std::string& text) {
  // Split into signed terms at top-level +/-. A '-' directly after '^' or
  // '/' belongs to a number (Laurent exponents, rational signs), not to the
  // term structure.
  struct RawTerm {
    bool negative;
    std::string body;
  };
  std::vector<RawTerm> raw;
  int depth = 0;
  bool negative = false;
  std::string cur;
  char prev_significant = 0;
  auto flush = [&](bool next_negative) {
    std::string t = cur;
    std::size_t a = 0, b = t.size();
    while (a < b && std::isspace(static_cast<unsigned char>(t[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(t[b - 1]))) --b;
    t = t.substr(a, b - a);
    if (!t.empty())
      raw.push_back({negative, t});
    else if (!raw.empty() || negative)
      throw Error("ParseError", "empty term in polynomial");
    cur.clear();
    negative = next_negative;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      bool numeric_sign = c == '-' && (prev_significant == '^' || prev_significant == '/');
      bool leading_sign = cur.find_first_not_of(" \t") == std::string::npos && c == '-' &&
                          raw.empty() && !negative;
      if (leading_sign) {
        negative = true;
        prev_significant = c;
        continue;
      }
      if (!numeric_sign) {
        flush(c == '-');
        prev_significant = c;
        continue;
      }
    }
    cur += c;
    if (!std::isspace(static_cast<unsigned char>(c))) prev_significant = c;
  }
  if (depth != 0) throw Error("ParseError", "unbalanced brackets in polynomial");
  flush(false);
  if (raw.empty()) throw Error("ParseError", "empty polynomial text");
  if (raw.size() == 1 && raw[0].body == "0" && !raw[0].negative) return Polynomial();

  Polynomial out;
  for (const RawTerm& t : raw) {
    Rational coef(1);
    std::string body = t.body;
    // candidate coefficient: text before the first top-level '*'
    int d = 0;
    std::size_t star = std::string::npos;
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      if (c == '(' || c == '[') ++d;
      if (c == ')' || c == ']') --d;
      if (d == 0 && c == '*') {
        star = i;
        break;
      }
    }
    if (star != std::string::npos) {
      std::string head = body.substr(0, star);
      std::size_t a = 0, b = head.size();
      while (a < b && std::isspace(static_cast<unsigned char>(head[a]))) ++a;
      while (b > a && std::isspace(static_cast<unsigned char>(head[b - 1]))) --b;
      head = head.substr(a, b - a);
      try {
        coef = parse_rational(head);
        body = body.substr(star + 1);
      } catch (const Error&) {
        // not a coefficient; the '*' belongs to the element syntax
      }
    }
    if (t.negative) coef = -coef;
    out.add_term(S.parse(body), coef);
  }
  return out;
}

}  // namespace findec
