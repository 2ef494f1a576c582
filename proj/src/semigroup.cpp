#include "findec/semigroup.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace findec {

std::vector<std::pair<Element, Element>> Semigroup::decompose_raw(const Element&) const {
  throw Error("CapabilityMissing", name() + " has no decomposer");
}

std::vector<Element> Semigroup::elements() const {
  throw Error("CapabilityMissing", name() + " is not finitely enumerable");
}

Element mul(const Semigroup& S, const Element& a, const Element& b) {
  if (!S.contains(a)) throw Error("ElementNotInCarrier", S.name() + " does not contain " + a.str());
  if (!S.contains(b)) throw Error("ElementNotInCarrier", S.name() + " does not contain " + b.str());
  Element r = S.mul_raw(a, b);
  if (!S.contains(r))
    throw Error("NotClosed", S.name() + ": " + a.str() + " * " + b.str() + " left the carrier");
  return r;
}

std::vector<std::pair<Element, Element>> decompose(const Semigroup& S, const Element& x) {
  if (!S.contains(x)) throw Error("ElementNotInCarrier", S.name() + " does not contain " + x.str());
  if (!S.has_decomposer()) throw Error("CapabilityMissing", S.name() + " has no decomposer");
  auto pairs = S.decompose_raw(x);
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (canonical_less(a.first, b.first)) return true;
    if (canonical_less(b.first, a.first)) return false;
    return canonical_less(a.second, b.second);
  });
  return pairs;
}

void verify_decomposer(const Semigroup& S, const Element& x, long long scan_bound) {
  auto pairs = decompose(S, x);
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
    if (pairs[i] == pairs[i + 1])
      throw Error("DecomposerBroken", S.name() + ": duplicate factorization of " + x.str());
  for (const auto& [p, q] : pairs)
    if (!(mul(S, p, q) == x))
      throw Error("DecomposerBroken", S.name() + ": listed pair (" + p.str() + ", " + q.str() +
                                          ") does not multiply to " + x.str());
  std::vector<Element> scan;
  if (S.finite())
    scan = S.elements();
  else if (scan_bound >= 0)
    scan = S.ball(scan_bound);
  else
    return;
  std::size_t found = 0;
  for (const Element& p : scan)
    for (const Element& q : scan)
      if (S.mul_raw(p, q) == x) {
        ++found;
        if (std::find(pairs.begin(), pairs.end(), std::make_pair(p, q)) == pairs.end())
          throw Error("DecomposerBroken", S.name() + ": missing factorization (" + p.str() +
                                              ", " + q.str() + ") of " + x.str());
      }
  if (S.finite() && found != pairs.size())
    throw Error("DecomposerBroken", S.name() + ": decomposer lists " +
                                        std::to_string(pairs.size()) + " pairs for " + x.str() +
                                        " but the carrier scan finds " + std::to_string(found));
}

bool is_invertible(const Semigroup& S, const Element& u) {
  auto e = S.neutral();
  if (!e) throw Error("NoNeutral", S.name() + " has no neutral element");
  if (u == *e) return true;
  // A right-invertible element of a finite-decomposition monoid is a unit:
  // u*v = e forces u^n*v^n = e for all n, the pairs (u^n, v^n) all factor e,
  // finiteness repeats a power, and cancelling gives u^p = e.
  for (const auto& [p, q] : decompose(S, *e))
    if (p == u) return true;
  return false;
}

Element inverse(const Semigroup& S, const Element& u) {
  auto e = S.neutral();
  if (!e) throw Error("NotInvertible", S.name() + " has no neutral element");
  if (!is_invertible(S, u)) throw Error("NotInvertible", u.str() + " is not a unit of " + S.name());
  if (u == *e) return *e;
  std::size_t cap = decompose(S, *e).size() + 1;
  Element prev = u;  // u^p while scanning for u^(p+1) == e
  Element pow = mul(S, u, u);
  for (std::size_t p = 2; p <= cap; ++p) {
    if (pow == *e) return prev;
    prev = pow;
    pow = mul(S, pow, u);
  }
  throw Error("NotInvertible", "power iteration for " + u.str() + " in " + S.name() +
                                   " exceeded the factorization count of the neutral element");
}

std::vector<Element> units(const Semigroup& S) {
  if (auto u = S.units_oracle()) {
    auto v = *u;
    std::sort(v.begin(), v.end(), canonical_less);
    return v;
  }
  auto e = S.neutral();
  if (!e) return {};
  std::vector<Element> out;
  for (const auto& [p, q] : decompose(S, *e)) out.push_back(p);
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// FiniteTableSemigroup

FiniteTableSemigroup::FiniteTableSemigroup(std::string name, std::vector<std::string> elem_names,
                                           std::vector<std::vector<int>> table)
    : name_(std::move(name)), names_(std::move(elem_names)), table_(std::move(table)) {
  const int n = static_cast<int>(names_.size());
  if (n == 0) throw Error("BadTable", name_ + ": empty carrier");
  {
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("BadTable", name_ + ": duplicate element name");
  }
  if (static_cast<int>(table_.size()) != n)
    throw Error("BadTable", name_ + ": table must have one row per element");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw Error("BadTable", name_ + ": table row of wrong length");
    for (int v : row)
      if (v < 0 || v >= n) throw Error("BadTable", name_ + ": table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error("NotAssociative", name_ + ": (" + names_[a] + "*" + names_[b] + ")*" +
                                            names_[c] + " = " + names_[table_[table_[a][b]][c]] +
                                            " but " + names_[a] + "*(" + names_[b] + "*" +
                                            names_[c] + ") = " + names_[table_[a][table_[b][c]]]);
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      neutral_ = e;
      break;
    }
  }
}

std::optional<Element> FiniteTableSemigroup::neutral() const {
  if (!neutral_) return std::nullopt;
  return elem(*neutral_);
}

bool FiniteTableSemigroup::contains(const Element& x) const {
  if (!x.is_table()) return false;
  const auto& t = x.as_table();
  return t.index >= 0 && t.index < size() && names_[t.index] == t.name;
}

Element FiniteTableSemigroup::mul_raw(const Element& a, const Element& b) const {
  return elem(table_[a.as_table().index][b.as_table().index]);
}

std::vector<std::pair<Element, Element>> FiniteTableSemigroup::decompose_raw(
    const Element& x) const {
  const int target = x.as_table().index;
  std::vector<std::pair<Element, Element>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (table_[a][b] == target) out.emplace_back(elem(a), elem(b));
  return out;
}

std::vector<Element> FiniteTableSemigroup::elements() const {
  std::vector<Element> out;
  out.reserve(names_.size());
  for (int i = 0; i < size(); ++i) out.push_back(elem(i));
  return out;
}

std::vector<Element> FiniteTableSemigroup::ball(long long) const { return elements(); }

Element FiniteTableSemigroup::parse(const std::string& text) const {
  return elem(index_of(text));
}

Element FiniteTableSemigroup::elem(int index) const { return Element::table(index, names_[index]); }

int FiniteTableSemigroup::index_of(const std::string& name) const {
  std::string t = name;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  for (int i = 0; i < size(); ++i)
    if (names_[i] == t) return i;
  throw Error("ElementNotInCarrier", name_ + " has no element named '" + t + "'");
}

// ---------------------------------------------------------------------------
// SubSemigroup

SubSemigroup::SubSemigroup(std::string name, SemigroupPtr parent, std::vector<Element> members)
    : name_(std::move(name)), parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (const Element& m : members_)
    if (!parent_->contains(m))
      throw Error("ElementNotInCarrier", name_ + ": " + m.str() + " is not in " + parent_->name());
  for (const Element& a : members_)
    for (const Element& b : members_)
      if (!contains(parent_->mul_raw(a, b)))
        throw Error("NotClosed", name_ + ": " + a.str() + " * " + b.str() + " escapes the subset");
}

std::optional<Element> SubSemigroup::neutral() const {
  for (const Element& e : members_) {
    bool ok = true;
    for (const Element& x : members_) {
      if (!(parent_->mul_raw(e, x) == x) || !(parent_->mul_raw(x, e) == x)) {
        ok = false;
        break;
      }
    }
    if (ok) return e;
  }
  return std::nullopt;
}

bool SubSemigroup::contains(const Element& x) const {
  return std::binary_search(members_.begin(), members_.end(), x, canonical_less);
}

Element SubSemigroup::mul_raw(const Element& a, const Element& b) const {
  return parent_->mul_raw(a, b);
}

std::vector<std::pair<Element, Element>> SubSemigroup::decompose_raw(const Element& x) const {
  std::vector<std::pair<Element, Element>> out;
  for (const Element& a : members_)
    for (const Element& b : members_)
      if (parent_->mul_raw(a, b) == x) out.emplace_back(a, b);
  return out;
}

std::vector<Element> SubSemigroup::ball(long long) const { return members_; }

Element SubSemigroup::parse(const std::string& text) const {
  Element x = parent_->parse(text);
  if (!contains(x)) throw Error("ElementNotInCarrier", name_ + " does not contain " + x.str());
  return x;
}

// ---------------------------------------------------------------------------
// Additive naturals

namespace {

class NatPlus : public Semigroup {
 public:
  explicit NatPlus(bool with_zero) : with_zero_(with_zero) {}

  std::string name() const override { return with_zero_ ? "nat-monoid" : "nat-plus"; }

  std::optional<Element> neutral() const override {
    if (with_zero_) return Element::natural(0);
    return std::nullopt;
  }

  bool contains(const Element& x) const override {
    return x.is_natural() && (with_zero_ || x.as_natural() >= 1);
  }

  Element mul_raw(const Element& a, const Element& b) const override {
    unsigned long long s = a.as_natural() + b.as_natural();
    if (s < a.as_natural()) throw Error("Overflow", "natural addition overflow");
    return Element::natural(s);
  }

  bool finite_decomposition() const override { return true; }

  std::vector<std::pair<Element, Element>> decompose_raw(const Element& x) const override {
    std::vector<std::pair<Element, Element>> out;
    unsigned long long n = x.as_natural();
    unsigned long long lo = with_zero_ ? 0 : 1;
    if (!with_zero_ && n < 2) return out;
    for (unsigned long long k = lo; k + lo <= n; ++k)
      out.emplace_back(Element::natural(k), Element::natural(n - k));
    return out;
  }

  bool finite() const override { return false; }

  std::vector<Element> ball(long long bound) const override {
    std::vector<Element> out;
    for (long long k = with_zero_ ? 0 : 1; k <= bound; ++k)
      out.push_back(Element::natural(static_cast<unsigned long long>(k)));
    return out;
  }

  Element parse(const std::string& text) const override {
    Element x = parse_natural_elem(text);
    if (!contains(x)) throw Error("ElementNotInCarrier", name() + " does not contain " + x.str());
    return x;
  }

  std::optional<std::vector<Element>> units_oracle() const override {
    if (with_zero_) return std::vector<Element>{Element::natural(0)};
    return std::vector<Element>{};
  }

  std::optional<SemigroupPtr> nonunits_oracle() const override;

 private:
  bool with_zero_;
};

// ---------------------------------------------------------------------------
// Multiplicative monomials

enum class MonKind { positive, with_unit, laurent };

class MonSemigroup : public Semigroup {
 public:
  explicit MonSemigroup(MonKind kind) : kind_(kind) {}

  std::string name() const override {
    switch (kind_) {
      case MonKind::positive: return "mon-plus";
      case MonKind::with_unit: return "mon";
      default: return "mon-laurent";
    }
  }

  std::optional<Element> neutral() const override {
    if (kind_ == MonKind::positive) return std::nullopt;
    return Element::monomial(Multiindex());
  }

  bool contains(const Element& x) const override {
    if (!x.is_monomial()) return false;
    const Multiindex& m = x.as_monomial();
    switch (kind_) {
      case MonKind::positive: return !m.empty() && m.all_positive();
      case MonKind::with_unit: return m.all_positive();
      default: return true;
    }
  }

  Element mul_raw(const Element& a, const Element& b) const override {
    return Element::monomial(a.as_monomial().plus(b.as_monomial()));
  }

  bool finite_decomposition() const override { return kind_ != MonKind::laurent; }

  bool has_decomposer() const override { return true; }

  std::vector<std::pair<Element, Element>> decompose_raw(const Element& x) const override {
    if (kind_ == MonKind::laurent)
      throw Error("NonFiniteDecomposition",
                  "mon-laurent: " + x.str() + " = (" + x.str() +
                      "*x1^-k) * x1^k for every integer k, so the factorization set is infinite");
    const Multiindex& m = x.as_monomial();
    std::vector<std::pair<Element, Element>> out;
    std::vector<std::pair<int, long long>> entries(m.exps().begin(), m.exps().end());
    std::map<int, long long> left;
    enum_divisors(entries, 0, left, m, out);
    return out;
  }

  bool finite() const override { return false; }

  std::vector<Element> ball(long long bound) const override {
    std::vector<Element> out;
    std::map<int, long long> cur;
    enum_ball(1, bound, cur, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  Element parse(const std::string& text) const override {
    Element x = Element::monomial(parse_multiindex(text, kind_ == MonKind::laurent));
    if (!contains(x)) throw Error("ElementNotInCarrier", name() + " does not contain " + x.str());
    return x;
  }

  std::optional<std::vector<Element>> units_oracle() const override {
    if (kind_ == MonKind::with_unit) return std::vector<Element>{Element::monomial(Multiindex())};
    if (kind_ == MonKind::positive) return std::vector<Element>{};
    return std::nullopt;
  }

  std::optional<SemigroupPtr> nonunits_oracle() const override;

 private:
  void enum_divisors(const std::vector<std::pair<int, long long>>& entries, std::size_t i,
                     std::map<int, long long>& left, const Multiindex& whole,
                     std::vector<std::pair<Element, Element>>& out) const {
    if (i == entries.size()) {
      Multiindex p(left);
      Multiindex q = whole.minus(p);
      if (kind_ == MonKind::positive && (p.empty() || q.empty())) return;
      out.emplace_back(Element::monomial(p), Element::monomial(q));
      return;
    }
    auto [var, e] = entries[i];
    for (long long k = 0; k <= e; ++k) {
      if (k != 0) left[var] = k;
      enum_divisors(entries, i + 1, left, whole, out);
      left.erase(var);
    }
  }

  void enum_ball(int var, long long remaining, std::map<int, long long>& cur,
                 std::vector<Element>& out) const {
    if (var > remaining) {
      Multiindex m(cur);
      if (kind_ != MonKind::positive || !m.empty()) out.push_back(Element::monomial(m));
      return;
    }
    enum_ball(var + 1, remaining, cur, out);
    for (long long mag = 1; mag * var <= remaining; ++mag) {
      cur[var] = mag;
      enum_ball(var + 1, remaining - mag * var, cur, out);
      if (kind_ == MonKind::laurent) {
        cur[var] = -mag;
        enum_ball(var + 1, remaining - mag * var, cur, out);
      }
      cur.erase(var);
    }
  }

  MonKind kind_;
};

// ---------------------------------------------------------------------------
// Finite builtin constructors

std::shared_ptr<const FiniteTableSemigroup> make_zmul(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a * b) % n;
  return std::make_shared<FiniteTableSemigroup>("zmul-" + std::to_string(n), names, table);
}

std::shared_ptr<const FiniteTableSemigroup> make_transformations(int n) {
  int count = 1;
  for (int i = 0; i < n; ++i) count *= n;
  auto image = [n](int f, int x) {
    for (int i = 0; i < x; ++i) f /= n;
    return f % n;
  };
  std::vector<std::string> names;
  for (int f = 0; f < count; ++f) {
    std::string s;
    for (int x = 0; x < n; ++x) s += static_cast<char>('0' + image(f, x));
    names.push_back(s);
  }
  std::vector<std::vector<int>> table(count, std::vector<int>(count));
  for (int f = 0; f < count; ++f)
    for (int g = 0; g < count; ++g) {
      // left-to-right composition: (f*g)(x) = g(f(x))
      int h = 0, pow = 1;
      for (int x = 0; x < n; ++x) {
        h += image(g, image(f, x)) * pow;
        pow *= n;
      }
      table[f][g] = h;
    }
  return std::make_shared<FiniteTableSemigroup>("t" + std::to_string(n), names, table);
}

std::shared_ptr<const FiniteTableSemigroup> make_min_chain(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = std::min(a, b);
  return std::make_shared<FiniteTableSemigroup>("min-chain-" + std::to_string(n), names, table);
}

std::shared_ptr<const FiniteTableSemigroup> make_left_zero(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = a;
  return std::make_shared<FiniteTableSemigroup>("left-zero-" + std::to_string(n), names, table);
}

std::shared_ptr<const FiniteTableSemigroup> make_abelian_group(const std::string& spec,
                                                               const std::vector<int>& factors) {
  int count = 1;
  for (int f : factors) {
    if (f < 1 || f > 9) throw Error("UnknownSemigroup", spec + ": cyclic factors must be 1..9");
    count *= f;
  }
  auto digits = [&](int idx) {
    std::string s(factors.size(), '0');
    for (std::size_t i = factors.size(); i-- > 0;) {
      s[i] = static_cast<char>('0' + idx % factors[i]);
      idx /= factors[i];
    }
    return s;
  };
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(digits(i));
  auto add = [&](int a, int b) {
    int r = 0;
    std::vector<int> da(factors.size()), db(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      da[i] = a % factors[i];
      db[i] = b % factors[i];
      a /= factors[i];
      b /= factors[i];
    }
    for (std::size_t i = 0; i < factors.size(); ++i) r = r * factors[i] + (da[i] + db[i]) % factors[i];
    return r;
  };
  std::vector<std::vector<int>> table(count, std::vector<int>(count));
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b) table[a][b] = add(a, b);
  return std::make_shared<FiniteTableSemigroup>(spec, names, table);
}

int parse_suffix_int(const std::string& spec, const std::string& prefix, int lo, int hi) {
  std::string num = spec.substr(prefix.size());
  for (char c : num)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error("UnknownSemigroup", "bad numeric suffix in '" + spec + "'");
  if (num.empty()) throw Error("UnknownSemigroup", "missing numeric suffix in '" + spec + "'");
  long long n = std::stoll(num);
  if (n < lo || n > hi)
    throw Error("UnknownSemigroup", spec + ": size must lie in [" + std::to_string(lo) + ", " +
                                        std::to_string(hi) + "]");
  return static_cast<int>(n);
}

std::optional<SemigroupPtr> NatPlus::nonunits_oracle() const {
  if (with_zero_) return SemigroupPtr(std::make_shared<NatPlus>(false));
  return std::nullopt;
}

std::optional<SemigroupPtr> MonSemigroup::nonunits_oracle() const {
  if (kind_ == MonKind::with_unit)
    return SemigroupPtr(std::make_shared<MonSemigroup>(MonKind::positive));
  return std::nullopt;
}

}  // namespace

SemigroupPtr builtin(const std::string& spec) {
  static std::mutex mu;
  static std::map<std::string, SemigroupPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(spec);
    if (it != cache.end()) return it->second;
  }
  SemigroupPtr made;
  if (spec == "nat-plus")
    made = std::make_shared<NatPlus>(false);
  else if (spec == "nat-monoid")
    made = std::make_shared<NatPlus>(true);
  else if (spec == "mon-plus")
    made = std::make_shared<MonSemigroup>(MonKind::positive);
  else if (spec == "mon")
    made = std::make_shared<MonSemigroup>(MonKind::with_unit);
  else if (spec == "mon-laurent")
    made = std::make_shared<MonSemigroup>(MonKind::laurent);
  else if (spec == "trivial")
    made = std::make_shared<FiniteTableSemigroup>("trivial", std::vector<std::string>{"e"},
                                                  std::vector<std::vector<int>>{{0}});
  else if (spec.rfind("zmul-", 0) == 0)
    made = make_zmul(parse_suffix_int(spec, "zmul-", 1, 64));
  else if (spec.rfind("min-chain-", 0) == 0)
    made = make_min_chain(parse_suffix_int(spec, "min-chain-", 1, 64));
  else if (spec.rfind("left-zero-", 0) == 0)
    made = make_left_zero(parse_suffix_int(spec, "left-zero-", 1, 64));
  else if (spec.rfind("table:", 0) == 0)
    made = load_cayley_table(spec.substr(6));
  else if (spec.rfind("group:", 0) == 0) {
    std::vector<int> factors;
    std::string body = spec.substr(6), part;
    std::istringstream in(body);
    while (std::getline(in, part, 'x')) {
      for (char c : part)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw Error("UnknownSemigroup", "bad cyclic factor in '" + spec + "'");
      if (part.empty()) throw Error("UnknownSemigroup", "bad cyclic factor in '" + spec + "'");
      factors.push_back(std::stoi(part));
    }
    if (factors.empty()) throw Error("UnknownSemigroup", "no cyclic factors in '" + spec + "'");
    made = make_abelian_group(spec, factors);
  } else if (spec.size() >= 2 && spec[0] == 't' &&
             std::all_of(spec.begin() + 1, spec.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    made = make_transformations(parse_suffix_int(spec, "t", 1, 4));
  else
    throw Error("UnknownSemigroup", "no builtin semigroup named '" + spec + "'");
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.emplace(spec, made);
  return it->second;
}

std::shared_ptr<const FiniteTableSemigroup> load_cayley_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadTable", "cannot open '" + path + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  if (rows.empty()) throw Error("BadTable", path + ": no data lines");
  const std::vector<std::string>& names = rows[0];
  const std::size_t n = names.size();
  if (rows.size() != n + 1)
    throw Error("BadTable", path + ": expected " + std::to_string(n) + " table rows after the " +
                                "name line, found " + std::to_string(rows.size() - 1));
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < n; ++i) index[names[i]] = static_cast<int>(i);
  if (index.size() != n) throw Error("BadTable", path + ": duplicate element name");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a + 1].size() != n)
      throw Error("BadTable", path + ": row " + std::to_string(a + 1) + " has " +
                                  std::to_string(rows[a + 1].size()) + " entries, expected " +
                                  std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      auto it = index.find(rows[a + 1][b]);
      if (it == index.end())
        throw Error("BadTable", path + ": unknown element '" + rows[a + 1][b] + "' in row " +
                                    std::to_string(a + 1));
      table[a][b] = it->second;
    }
  }
  return std::make_shared<FiniteTableSemigroup>("table:" + path, names, table);
}

std::string render_cayley_table(const Semigroup& S, const std::vector<Element>& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ' ';
    out += order[i].str();
  }
  out += '\n';
  for (const Element& a : order) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (j) out += ' ';
      out += mul(S, a, order[j]).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace findec
