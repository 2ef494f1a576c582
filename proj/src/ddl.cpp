#include "findec/ddl.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace findec {

namespace {

long long label_int(const std::string& s) {
  if (s.empty()) throw Error("BadDdl", "empty label");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error("BadDdl", "label '" + s + "' is not a natural number");
  return std::stoll(s);
}

/// {y in N : y >= lo} under addition. lo = 0 is the full additive monoid.
class NatAtLeast : public Semigroup {
 public:
  NatAtLeast(std::string name, unsigned long long lo) : name_(std::move(name)), lo_(lo) {}

  std::string name() const override { return name_; }

  std::optional<Element> neutral() const override {
    if (lo_ == 0) return Element::natural(0);
    return std::nullopt;
  }

  bool contains(const Element& x) const override { return x.is_natural() && x.as_natural() >= lo_; }

  Element mul_raw(const Element& a, const Element& b) const override {
    return Element::natural(a.as_natural() + b.as_natural());
  }

  bool finite_decomposition() const override { return true; }

  std::vector<std::pair<Element, Element>> decompose_raw(const Element& x) const override {
    std::vector<std::pair<Element, Element>> out;
    unsigned long long n = x.as_natural();
    for (unsigned long long a = lo_; a + lo_ <= n; ++a)
      out.emplace_back(Element::natural(a), Element::natural(n - a));
    return out;
  }

  bool finite() const override { return false; }

  std::vector<Element> ball(long long bound) const override {
    std::vector<Element> out;
    for (long long y = static_cast<long long>(lo_); y <= bound; ++y)
      out.push_back(Element::natural(static_cast<unsigned long long>(y)));
    return out;
  }

  Element parse(const std::string& text) const override {
    Element x = parse_natural_elem(text);
    if (!contains(x)) throw Error("ElementNotInCarrier", name_ + " does not contain " + x.str());
    return x;
  }

 private:
  std::string name_;
  unsigned long long lo_;
};

IndexSemilattice reversed_naturals(const std::string& description) {
  IndexSemilattice idx;
  idx.description = description;
  idx.leq = [](const std::string& a, const std::string& b) {
    return label_int(b) <= label_int(a);
  };
  idx.join = [](const std::string& a, const std::string& b) {
    return std::to_string(std::min(label_int(a), label_int(b)));
  };
  idx.labels_up_to = [](long long bound) {
    std::vector<std::string> out;
    for (long long k = 0; k <= bound; ++k) out.push_back(std::to_string(k));
    return out;
  };
  idx.finite = false;
  return idx;
}

}  // namespace

Element DdlSystem::make(const std::string& label, const Element& inner) const {
  SemigroupPtr S = component(label);
  if (!S->contains(inner))
    throw Error("ElementNotInCarrier",
                "component " + label + " of " + name + " does not contain " + inner.str());
  return Element::ddl_pair(label, inner);
}

Element DdlSystem::parse(const std::string& text) const {
  std::string s = text;
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  s = s.substr(a, b - a);
  if (s.size() < 3 || s.front() != '(' || s.back() != ')')
    throw Error("ParseError", "expected \"(label|element)\", got '" + text + "'");
  s = s.substr(1, s.size() - 2);
  auto bar = s.find('|');
  if (bar == std::string::npos)
    throw Error("ParseError", "expected \"(label|element)\", got '" + text + "'");
  std::string label = s.substr(0, bar);
  return make(label, component(label)->parse(s.substr(bar + 1)));
}

Element DdlSystem::morphism(const std::string& alpha, const std::string& beta,
                            const Element& x) const {
  if (!index.leq(beta, alpha))
    throw Error("MissingMorphism",
                name + ": no morphism into " + alpha + " from " + beta + " (not below it)");
  SemigroupPtr src = component(beta);
  if (!src->contains(x))
    throw Error("ElementNotInCarrier",
                "component " + beta + " of " + name + " does not contain " + x.str());
  Element y = morphism_fn(alpha, beta, x);
  if (!component(alpha)->contains(y))
    throw Error("MissingMorphism", name + ": morphism " + alpha + " <- " + beta + " sent " +
                                       x.str() + " to " + y.str() + ", outside the target");
  return y;
}

std::vector<Element> DdlSystem::fiber(const std::string& alpha, const std::string& beta,
                                      const Element& y, long long bound) const {
  if (!index.leq(beta, alpha))
    throw Error("MissingMorphism",
                name + ": no morphism into " + alpha + " from " + beta + " (not below it)");
  if (fiber_fn) return fiber_fn(alpha, beta, y, bound);
  std::vector<Element> out;
  for (const Element& x : component(beta)->ball(bound))
    if (morphism(alpha, beta, x) == y) out.push_back(x);
  return out;
}

Element DdlSystem::mul(const Element& x, const Element& y) const {
  const auto& px = x.as_ddl_pair();
  const auto& py = y.as_ddl_pair();
  std::string j = index.join(px.label, py.label);
  Element xi = morphism(j, px.label, *px.inner);
  Element yi = morphism(j, py.label, *py.inner);
  return Element::ddl_pair(j, findec::mul(*component(j), xi, yi));
}

bool DdlSystem::finite() const {
  if (!index.finite) return false;
  for (const std::string& l : index.labels_up_to(0))
    if (!component(l)->finite()) return false;
  return true;
}

std::vector<Element> DdlSystem::ball(long long bound) const {
  std::vector<Element> out;
  for (const std::string& l : index.labels_up_to(bound))
    for (const Element& x : component(l)->ball(bound)) out.push_back(Element::ddl_pair(l, x));
  return out;
}

// ---------------------------------------------------------------------------
// validation

namespace {

struct ItemBuilder {
  CheckItem item;
  explicit ItemBuilder(std::string name) { item.name = std::move(name); }
  void fail(const std::string& witness) {
    if (item.pass) {
      item.pass = false;
      item.witness = witness;
    }
  }
  void count() { ++item.cases; }
};

}  // namespace

ValidationReport validate_system(const DdlSystem& sys, long long bound) {
  ValidationReport rep;
  rep.bound = bound;
  rep.exhaustive = sys.finite();
  const auto L = sys.index.labels_up_to(bound);

  ItemBuilder idem("join-idempotent"), comm("join-commutative"), assoc("join-associative"),
      consistent("leq-join-consistent"), upper("join-upper-bound");
  for (const auto& a : L) {
    idem.count();
    if (sys.index.join(a, a) != a) idem.fail("join(" + a + "," + a + ") != " + a);
  }
  for (const auto& a : L)
    for (const auto& b : L) {
      comm.count();
      std::string ab = sys.index.join(a, b);
      if (ab != sys.index.join(b, a)) comm.fail("join(" + a + "," + b + ") != join(" + b + "," + a + ")");
      upper.count();
      if (!sys.index.leq(a, ab) || !sys.index.leq(b, ab))
        upper.fail("join(" + a + "," + b + ") = " + ab + " is not above both");
      consistent.count();
      if (sys.index.leq(a, b) != (ab == b))
        consistent.fail("leq(" + a + "," + b + ") disagrees with join = " + ab);
    }
  for (const auto& a : L)
    for (const auto& b : L)
      for (const auto& c : L) {
        assoc.count();
        if (sys.index.join(sys.index.join(a, b), c) != sys.index.join(a, sys.index.join(b, c))) {
          assoc.fail("join not associative on (" + a + "," + b + "," + c + ")");
        }
      }

  ItemBuilder ident("morphism-identity"), compat("morphism-compatibility"),
      multip("morphism-multiplicative");
  for (const auto& a : L) {
    for (const Element& x : sys.component(a)->ball(bound)) {
      ident.count();
      try {
        if (!(sys.morphism(a, a, x) == x)) ident.fail("phi[" + a + "][" + a + "](" + x.str() + ") != identity");
      } catch (const Error& e) {
        ident.fail(e.what());
      }
    }
  }
  for (const auto& a : L)
    for (const auto& b : L) {
      if (!sys.index.leq(b, a)) continue;
      SemigroupPtr Sb = sys.component(b);
      const auto ball_b = Sb->ball(bound);
      for (const Element& x : ball_b)
        for (const Element& y : ball_b) {
          multip.count();
          try {
            Element lhs = sys.morphism(a, b, findec::mul(*Sb, x, y));
            Element rhs = findec::mul(*sys.component(a), sys.morphism(a, b, x), sys.morphism(a, b, y));
            if (!(lhs == rhs))
              multip.fail("phi[" + a + "][" + b + "] not multiplicative at (" + x.str() + ", " +
                          y.str() + "): " + lhs.str() + " != " + rhs.str());
          } catch (const Error& e) {
            multip.fail(e.what());
          }
        }
      for (const auto& c : L) {
        if (!sys.index.leq(c, b)) continue;
        for (const Element& x : sys.component(c)->ball(bound)) {
          compat.count();
          try {
            Element two_step = sys.morphism(a, b, sys.morphism(b, c, x));
            Element one_step = sys.morphism(a, c, x);
            if (!(two_step == one_step))
              compat.fail("phi[" + a + "][" + b + "] after phi[" + b + "][" + c + "] differs from phi[" +
                          a + "][" + c + "] at " + x.str());
          } catch (const Error& e) {
            compat.fail(e.what());
          }
        }
      }
    }

  ItemBuilder star("star-associative");
  {
    const long long star_bound = std::min<long long>(bound, 6);
    const auto U = sys.ball(star_bound);
    const long long cap = 30000;
    bool done = false;
    for (std::size_t i = 0; i < U.size() && !done; ++i)
      for (std::size_t j = 0; j < U.size() && !done; ++j)
        for (std::size_t k = 0; k < U.size() && !done; ++k) {
          star.count();
          try {
            Element lhs = sys.mul(sys.mul(U[i], U[j]), U[k]);
            Element rhs = sys.mul(U[i], sys.mul(U[j], U[k]));
            if (!(lhs == rhs))
              star.fail("product not associative on (" + U[i].str() + ", " + U[j].str() + ", " +
                        U[k].str() + ")");
          } catch (const Error& e) {
            star.fail(e.what());
          }
          if (star.item.cases >= cap && !rep.exhaustive) done = true;
        }
  }

  ItemBuilder neutral("bottom-neutral");
  if (sys.index.finite) {
    // a monoid arises when the index has a least label whose component has a
    // neutral element
    std::optional<std::string> least;
    for (const auto& a : L) {
      bool below_all = true;
      for (const auto& b : L) below_all = below_all && sys.index.leq(a, b);
      if (below_all) {
        least = a;
        break;
      }
    }
    if (least) {
      auto e = sys.component(*least)->neutral();
      if (e) {
        Element unit = Element::ddl_pair(*least, *e);
        for (const Element& x : sys.ball(bound)) {
          neutral.count();
          try {
            if (!(sys.mul(unit, x) == x) || !(sys.mul(x, unit) == x))
              neutral.fail("(" + *least + "|" + e->str() + ") fails to be neutral at " + x.str());
          } catch (const Error& e2) {
            neutral.fail(e2.what());
          }
        }
      }
    }
  }

  rep.items = {idem.item, comm.item,   assoc.item,  consistent.item, upper.item,
               ident.item, compat.item, multip.item, star.item,       neutral.item};
  return rep;
}

// ---------------------------------------------------------------------------
// criterion

CriterionReport fd_criterion_check(const DdlSystem& sys, long long bound) {
  CriterionReport rep;
  rep.bound = bound;
  const bool exhaustive = sys.finite();
  const long long b1 = bound, b2 = exhaustive ? bound : 2 * bound;
  const auto L1 = sys.index.labels_up_to(b1);
  const auto L2 = sys.index.labels_up_to(b2);
  const std::string pass_verdict = exhaustive ? "verified-exhaustive" : "verified-to-bound";

  CriterionVerdict ci{"i", pass_verdict, 0, ""};
  for (const auto& alpha : L1) {
    for (const Element& y : sys.component(alpha)->ball(b1)) {
      ++ci.cases;
      long long c1 = 0, c2 = 0;
      for (const auto& beta : L1)
        if (sys.index.leq(beta, alpha) && !sys.fiber(alpha, beta, y, b1).empty()) ++c1;
      for (const auto& beta : L2)
        if (sys.index.leq(beta, alpha) && !sys.fiber(alpha, beta, y, b2).empty()) ++c2;
      if (c2 > c1 && ci.verdict != "violated-with-witness") {
        ci.verdict = "violated-with-witness";
        ci.witness = "(" + alpha + "|" + y.str() + ") has " + std::to_string(c1) +
                     " nonempty-fiber labels at bound " + std::to_string(b1) + " but " +
                     std::to_string(c2) + " at bound " + std::to_string(b2);
      }
    }
  }
  rep.conditions.push_back(ci);

  CriterionVerdict cii{"ii", pass_verdict, 0, ""};
  for (const auto& alpha : L1) {
    SemigroupPtr S = sys.component(alpha);
    ++cii.cases;
    if (!S->finite_decomposition()) {
      std::string detail = S->name() + " reports no finite decomposition property";
      auto probe = S->ball(std::max<long long>(b1, 1));
      if (!probe.empty()) {
        try {
          decompose(*S, probe.back());
        } catch (const Error& e) {
          detail = e.what();
        }
      }
      if (cii.verdict != "violated-with-witness") {
        cii.verdict = "violated-with-witness";
        cii.witness = "component " + alpha + ": " + detail;
      }
      continue;
    }
    long long scanned = 0;
    for (const Element& x : S->ball(b1)) {
      if (++scanned > 64 && !exhaustive) break;
      ++cii.cases;
      try {
        verify_decomposer(*S, x, b1);
      } catch (const Error& e) {
        if (cii.verdict != "violated-with-witness") {
          cii.verdict = "violated-with-witness";
          cii.witness = "component " + alpha + ": " + e.what();
        }
      }
    }
  }
  rep.conditions.push_back(cii);

  CriterionVerdict ciii{"iii", pass_verdict, 0, ""};
  for (const auto& alpha : L1)
    for (const auto& beta : L1) {
      if (!sys.index.leq(beta, alpha)) continue;
      for (const Element& y : sys.component(alpha)->ball(b1)) {
        ++ciii.cases;
        std::size_t f1 = sys.fiber(alpha, beta, y, b1).size();
        std::size_t f2 = sys.fiber(alpha, beta, y, b2).size();
        if (f2 > f1 && ciii.verdict != "violated-with-witness") {
          ciii.verdict = "violated-with-witness";
          ciii.witness = "fiber of (" + alpha + "|" + y.str() + ") from component " + beta +
                         " has " + std::to_string(f1) + " elements at bound " + std::to_string(b1) +
                         " but " + std::to_string(f2) + " at bound " + std::to_string(b2);
        }
      }
    }
  rep.conditions.push_back(ciii);
  return rep;
}

std::vector<std::pair<Element, Element>> brute_decompositions(const DdlSystem& sys,
                                                              const Element& z, long long bound) {
  std::vector<std::pair<Element, Element>> out;
  const auto U = sys.ball(bound);
  for (const Element& u : U)
    for (const Element& v : U)
      if (sys.mul(u, v) == z) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------------------
// demo systems

DdlSystem fig1_system() {
  DdlSystem sys;
  sys.name = "fig1";
  sys.index = reversed_naturals(
      "naturals in reversed order (bigger integer below), join = integer min");
  sys.component = [](const std::string& label) -> SemigroupPtr {
    unsigned long long k = static_cast<unsigned long long>(label_int(label));
    return std::make_shared<NatAtLeast>("fig1-level-" + label, k);
  };
  sys.morphism_fn = [](const std::string&, const std::string&, const Element& x) { return x; };
  sys.fiber_fn = [](const std::string&, const std::string& beta, const Element& y,
                    long long) -> std::vector<Element> {
    if (y.as_natural() >= static_cast<unsigned long long>(label_int(beta))) return {y};
    return {};
  };
  sys.fiber_exact = true;
  return sys;
}

DdlSystem defect_system(const std::string& which) {
  if (which == "i") {
    DdlSystem sys;
    sys.name = "defect-i";
    sys.index = reversed_naturals(
        "naturals in reversed order; every component is the full additive monoid");
    sys.component = [](const std::string& label) -> SemigroupPtr {
      return std::make_shared<NatAtLeast>("defect-i-level-" + label, 0);
    };
    sys.morphism_fn = [](const std::string&, const std::string&, const Element& x) { return x; };
    sys.fiber_fn = [](const std::string&, const std::string&, const Element& y,
                      long long) -> std::vector<Element> { return {y}; };
    sys.fiber_exact = true;
    return sys;
  }
  if (which == "ii") {
    DdlSystem sys;
    sys.name = "defect-ii";
    IndexSemilattice idx;
    idx.description = "single label";
    idx.leq = [](const std::string& a, const std::string& b) { return a == b; };
    idx.join = [](const std::string& a, const std::string&) { return a; };
    idx.labels_up_to = [](long long) { return std::vector<std::string>{"0"}; };
    idx.finite = true;
    sys.index = idx;
    sys.component = [](const std::string&) { return builtin("mon-laurent"); };
    sys.morphism_fn = [](const std::string&, const std::string&, const Element& x) { return x; };
    sys.fiber_fn = [](const std::string&, const std::string&, const Element& y,
                      long long) -> std::vector<Element> { return {y}; };
    sys.fiber_exact = true;
    return sys;
  }
  if (which == "iii") {
    DdlSystem sys;
    sys.name = "defect-iii";
    IndexSemilattice idx;
    idx.description = "two-label chain 0 below 1";
    idx.leq = [](const std::string& a, const std::string& b) { return a == b || (a == "0" && b == "1"); };
    idx.join = [](const std::string& a, const std::string& b) { return a == b ? a : "1"; };
    idx.labels_up_to = [](long long) { return std::vector<std::string>{"0", "1"}; };
    idx.finite = true;
    sys.index = idx;
    sys.component = [](const std::string& label) -> SemigroupPtr {
      if (label == "0") return builtin("nat-plus");
      return builtin("trivial");
    };
    sys.morphism_fn = [](const std::string& alpha, const std::string& beta,
                         const Element& x) -> Element {
      if (alpha == beta) return x;
      return builtin("trivial")->parse("e");  // constant morphism onto the one-point component
    };
    // phi[1][0] is constant, so the fiber over e is the whole source ball
    sys.fiber_fn = [](const std::string& alpha, const std::string& beta, const Element& y,
                      long long bound) -> std::vector<Element> {
      if (alpha == beta) return {y};
      return builtin("nat-plus")->ball(bound);
    };
    sys.fiber_exact = false;
    return sys;
  }
  throw Error("BadDdl", "no defect system named '" + which + "' (expected i, ii, iii)");
}

Element defect_witness_element(const std::string& which) {
  DdlSystem sys = defect_system(which);
  if (which == "i") return sys.make("0", Element::natural(2));
  if (which == "ii") return sys.make("0", Element::monomial(parse_multiindex("x1", true)));
  return sys.make("1", builtin("trivial")->parse("e"));
}

std::vector<std::pair<Element, Element>> defect_decomposition_family(const std::string& which,
                                                                     long long bound) {
  DdlSystem sys = defect_system(which);
  std::vector<std::pair<Element, Element>> out;
  if (which == "i") {
    // (0|1) * (k|1) = (0|2) for every label k
    for (long long k = 0; out.size() < static_cast<std::size_t>(bound); ++k)
      out.emplace_back(sys.make("0", Element::natural(1)),
                       sys.make(std::to_string(k), Element::natural(1)));
    return out;
  }
  if (which == "ii") {
    // (0|x1^(1-j)) * (0|x1^j) = (0|x1) for every integer j
    for (long long j = 1; out.size() < static_cast<std::size_t>(bound); ++j) {
      Multiindex left, right;
      left = parse_multiindex("x1^" + std::to_string(1 - j), true);
      right = parse_multiindex("x1^" + std::to_string(j), true);
      out.emplace_back(sys.make("0", Element::monomial(left)),
                       sys.make("0", Element::monomial(right)));
    }
    return out;
  }
  if (which == "iii") {
    // (1|e) * (0|j) = (1|e) for every j in the infinite fiber
    Element e = sys.make("1", builtin("trivial")->parse("e"));
    for (long long j = 1; out.size() < static_cast<std::size_t>(bound); ++j)
      out.emplace_back(e, sys.make("0", Element::natural(static_cast<unsigned long long>(j))));
    return out;
  }
  throw Error("BadDdl", "no defect system named '" + which + "' (expected i, ii, iii)");
}

// ---------------------------------------------------------------------------
// declarative files

namespace {

struct FileDdl {
  std::vector<std::string> labels;
  std::map<std::string, SemigroupPtr> comps;
  std::set<std::pair<std::string, std::string>> leq;               // (below, above)
  std::map<std::pair<std::string, std::string>, std::string> join;  // unordered key (a,b), a<=b
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>>
      morph;  // (alpha,beta) -> x.str() -> y text
};

std::pair<std::string, std::string> unordered_key(const std::string& a, const std::string& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

DdlSystem load_ddl_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadDdl", "cannot open '" + path + "'");
  auto data = std::make_shared<FileDdl>();
  std::set<std::string> label_set;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error("BadDdl", path + ":" + std::to_string(lineno) + ": " + msg);
  };
  auto need_label = [&](const std::string& l) {
    if (!label_set.count(l)) fail("unknown label '" + l + "'");
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "labels") {
      std::string l;
      while (ls >> l) {
        if (!label_set.insert(l).second) fail("duplicate label '" + l + "'");
        data->labels.push_back(l);
      }
      if (data->labels.empty()) fail("labels line lists none");
    } else if (word == "component") {
      std::string l, spec;
      if (!(ls >> l >> spec)) fail("component needs: component <label> <semigroup>");
      need_label(l);
      if (data->comps.count(l)) fail("component for '" + l + "' given twice");
      data->comps[l] = builtin(spec);
    } else if (word == "leq") {
      std::string below, above;
      if (!(ls >> below >> above)) fail("leq needs: leq <below> <above>");
      need_label(below);
      need_label(above);
      data->leq.insert({below, above});
    } else if (word == "join") {
      std::string a, b, c;
      if (!(ls >> a >> b >> c)) fail("join needs: join <a> <b> <result>");
      need_label(a);
      need_label(b);
      need_label(c);
      data->join[unordered_key(a, b)] = c;
    } else if (word == "morphism") {
      std::string alpha, beta, entry;
      if (!(ls >> alpha >> beta)) fail("morphism needs: morphism <target> <source> x:y ...");
      need_label(alpha);
      need_label(beta);
      auto& table = data->morph[{alpha, beta}];
      while (ls >> entry) {
        auto colon = entry.find(':');
        if (colon == std::string::npos) fail("morphism entry '" + entry + "' needs ':'");
        table[entry.substr(0, colon)] = entry.substr(colon + 1);
      }
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  if (data->labels.empty()) throw Error("BadDdl", path + ": no labels");
  for (const auto& l : data->labels) {
    if (!data->comps.count(l)) throw Error("BadDdl", path + ": no component for label '" + l + "'");
    data->leq.insert({l, l});
  }
  // transitive closure of the declared order
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [a, b] : std::set<std::pair<std::string, std::string>>(data->leq))
      for (const auto& [c, d] : std::set<std::pair<std::string, std::string>>(data->leq))
        if (b == c && data->leq.insert({a, d}).second) changed = true;
  }
  // joins of comparable pairs are forced
  for (const auto& a : data->labels)
    for (const auto& b : data->labels) {
      if (data->leq.count({a, b})) data->join.try_emplace(unordered_key(a, b), b);
      if (data->leq.count({b, a})) data->join.try_emplace(unordered_key(a, b), a);
    }
  for (const auto& a : data->labels)
    for (const auto& b : data->labels)
      if (!data->join.count(unordered_key(a, b)))
        throw Error("BadDdl", path + ": missing join of '" + a + "' and '" + b + "'");

  DdlSystem sys;
  sys.name = path;
  IndexSemilattice idx;
  idx.description = "declared labels: " + std::to_string(data->labels.size());
  idx.finite = true;
  idx.labels_up_to = [data](long long) { return data->labels; };
  idx.leq = [data](const std::string& a, const std::string& b) {
    return data->leq.count({a, b}) > 0;
  };
  idx.join = [data, path](const std::string& a, const std::string& b) -> std::string {
    auto it = data->join.find(unordered_key(a, b));
    if (it == data->join.end())
      throw Error("BadDdl", path + ": missing join of '" + a + "' and '" + b + "'");
    return it->second;
  };
  sys.index = idx;
  sys.component = [data, path](const std::string& l) -> SemigroupPtr {
    auto it = data->comps.find(l);
    if (it == data->comps.end()) throw Error("BadDdl", path + ": unknown label '" + l + "'");
    return it->second;
  };
  sys.morphism_fn = [data, path](const std::string& alpha, const std::string& beta,
                                 const Element& x) -> Element {
    auto it = data->morph.find({alpha, beta});
    if (it == data->morph.end()) {
      if (alpha == beta) return x;
      throw Error("MissingMorphism", path + ": no morphism table for " + alpha + " <- " + beta);
    }
    auto entry = it->second.find(x.str());
    if (entry == it->second.end())
      throw Error("MissingMorphism",
                  path + ": morphism " + alpha + " <- " + beta + " has no entry for " + x.str());
    auto comp = data->comps.find(alpha);
    return comp->second->parse(entry->second);
  };
  sys.fiber_fn = nullptr;  // finite components: scan
  sys.fiber_exact = false;
  return sys;
}

DdlSystem resolve_ddl(const std::string& spec) {
  if (spec == "fig1") return fig1_system();
  if (spec.rfind("defect-", 0) == 0) return defect_system(spec.substr(7));
  return load_ddl_file(spec);
}

}  // namespace findec
