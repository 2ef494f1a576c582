#include "findec/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace findec {

namespace {

std::string key(const Element& x) { return x.str(); }

bool find_neutral(const SemigroupPtr& S, const std::vector<Element>& members, Element& out) {
  for (const Element& e : members) {
    bool ok = true;
    for (const Element& x : members) {
      if (!(mul(*S, e, x) == x) || !(mul(*S, x, e) == x)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out = e;
      return true;
    }
  }
  return false;
}

}  // namespace

long long PeelingResult::layer_of(const Element& x) const {
  for (const PeelLayer& layer : layers)
    if (layer.group->contains(x)) return layer.index;
  if (terminal && terminal->contains(x)) return -1;
  throw Error("ElementNotInCarrier", source->name() + " peeling does not place " + x.str());
}

PeelingResult peel(const SemigroupPtr& S) {
  PeelingResult P;
  P.source = S;
  P.finite = S->finite();

  if (P.finite) {
    std::vector<Element> tail = S->elements();
    long long n = 0;
    while (!tail.empty()) {
      Element e;
      if (!find_neutral(S, tail, e)) {
        P.terminal_elements = tail;
        P.terminal = std::make_shared<SubSemigroup>(S->name() + "-terminal", S, tail);
        return P;
      }
      std::vector<Element> units_here, rest;
      for (const Element& x : tail) {
        bool unit = false;
        for (const Element& y : tail)
          if (mul(*S, x, y) == e && mul(*S, y, x) == e) {
            unit = true;
            break;
          }
        (unit ? units_here : rest).push_back(x);
      }
      P.layers.push_back(
          {n, e,
           std::make_shared<SubSemigroup>(S->name() + "-layer-" + std::to_string(n), S,
                                          units_here)});
      tail = std::move(rest);
      ++n;
    }
    return P;  // empty terminal
  }

  // infinite handle: strip unit groups while the tail still has a neutral
  SemigroupPtr cur = S;
  long long n = 0;
  while (true) {
    auto e = cur->neutral();
    if (!e) {
      P.terminal = cur;
      return P;
    }
    std::vector<Element> us = units(*cur);
    auto rest = cur->nonunits_oracle();
    if (!rest)
      throw Error("CapabilityMissing",
                  "peeling " + cur->name() + " needs a nonunits oracle for the tail");
    P.layers.push_back(
        {n, *e,
         std::make_shared<SubSemigroup>(cur->name() + "-layer-" + std::to_string(n), cur, us)});
    cur = *rest;
    ++n;
  }
}

Element projection(const PeelingResult& P, long long n, const Element& x) {
  if (n < 0 || n >= static_cast<long long>(P.layers.size()))
    throw Error("UnknownLayer", "no layer " + std::to_string(n) + " in the peeling of " +
                                    P.source->name());
  const Element& e = P.layers[static_cast<std::size_t>(n)].neutral;
  Element ex = mul(*P.source, e, x);
  Element xe = mul(*P.source, x, e);
  Element exe = mul(*P.source, ex, e);
  if (!(ex == xe) || !(ex == exe))
    throw Error("FalsifiedLemma", "sandwich identity fails in " + P.source->name() + ": e_" +
                                      std::to_string(n) + " = " + e.str() + ", x = " + x.str() +
                                      ", e*x = " + ex.str() + ", x*e = " + xe.str() +
                                      ", e*x*e = " + exe.str());
  long long l = P.layer_of(exe);
  if (l != -1 && l < n)
    throw Error("FalsifiedLemma", "projection to tail " + std::to_string(n) + " of " + x.str() +
                                      " landed in layer " + std::to_string(l));
  return exe;
}

Element layer_morphism(const PeelingResult& P, long long target, long long source,
                       const Element& x) {
  if (source < 0 || target >= static_cast<long long>(P.layers.size()) || source > target)
    throw Error("UnknownLayer", "no layer morphism " + std::to_string(target) + " <- " +
                                    std::to_string(source) + " in the peeling of " +
                                    P.source->name());
  if (!P.layers[static_cast<std::size_t>(source)].group->contains(x))
    throw Error("ElementNotInCarrier",
                "layer " + std::to_string(source) + " does not contain " + x.str());
  Element y = projection(P, target, x);
  if (!P.layers[static_cast<std::size_t>(target)].group->contains(y))
    throw Error("FalsifiedClaim", "projection of the unit " + x.str() + " into tail " +
                                      std::to_string(target) +
                                      " is not a unit there: " + y.str());
  return y;
}

namespace {

struct Item {
  CheckItem item;
  explicit Item(std::string name) { item.name = std::move(name); }
  void fail(const std::string& w) {
    if (item.pass) {
      item.pass = false;
      item.witness = w;
    }
  }
};

}  // namespace

StructureReport verify_structure_theorem(const SemigroupPtr& S, long long bound) {
  StructureReport rep;
  rep.peeling = peel(S);
  const PeelingResult& P = rep.peeling;
  rep.bound = P.finite ? 0 : bound;

  const std::vector<Element> universe = P.finite ? S->elements() : S->ball(bound);
  std::map<std::string, long long> layer_cache;
  auto lay = [&](const Element& x) -> long long {
    auto it = layer_cache.find(key(x));
    if (it != layer_cache.end()) return it->second;
    long long l = P.layer_of(x);
    layer_cache.emplace(key(x), l);
    return l;
  };
  auto members_of = [&](const PeelLayer& L) {
    return L.group->finite() ? L.group->elements() : L.group->ball(bound);
  };

  Item partition("partition");
  for (const Element& x : universe) {
    ++partition.item.cases;
    long long hits = 0;
    for (const PeelLayer& L : P.layers)
      if (L.group->contains(x)) ++hits;
    if (P.terminal && P.terminal->contains(x)) ++hits;
    if (hits != 1)
      partition.fail(x.str() + " sits in " + std::to_string(hits) + " parts of the peeling");
  }

  Item groups("layer-groups");
  for (const PeelLayer& L : P.layers) {
    const auto members = members_of(L);
    for (const Element& x : members) {
      ++groups.item.cases;
      if (!(mul(*S, L.neutral, x) == x) || !(mul(*S, x, L.neutral) == x))
        groups.fail(L.neutral.str() + " is not neutral on layer " + std::to_string(L.index) +
                    " at " + x.str());
      bool has_inverse = false;
      for (const Element& y : members)
        if (mul(*S, x, y) == L.neutral && mul(*S, y, x) == L.neutral) {
          has_inverse = true;
          break;
        }
      if (!has_inverse)
        groups.fail(x.str() + " has no inverse inside layer " + std::to_string(L.index));
      for (const Element& y : members) {
        if (!L.group->contains(mul(*S, x, y)))
          groups.fail("layer " + std::to_string(L.index) + " is not closed: " + x.str() + " * " +
                      y.str());
      }
    }
  }

  Item closure("tail-closure");
  Item absorbs("terminal-absorbs");
  Item layer_product("layer-product");
  for (const Element& x : universe)
    for (const Element& y : universe) {
      long long lx = lay(x), ly = lay(y);
      Element xy = mul(*S, x, y);
      long long lxy = lay(xy);
      ++closure.item.cases;
      long long floor_level = (lx == -1 || ly == -1) ? -1 : std::min(lx, ly);
      if (floor_level == -1) {
        ++absorbs.item.cases;
        if (lxy != -1)
          absorbs.fail(x.str() + " * " + y.str() + " escaped the terminal into layer " +
                       std::to_string(lxy));
      } else if (lxy != -1 && lxy < floor_level) {
        closure.fail(x.str() + " * " + y.str() + " = " + xy.str() + " left tail " +
                     std::to_string(floor_level));
      }
      if (lx != -1 && ly != -1) {
        ++layer_product.item.cases;
        long long m = std::max(lx, ly);
        if (lxy != m) {
          layer_product.fail(x.str() + " * " + y.str() + " = " + xy.str() + " sits in layer " +
                             std::to_string(lxy) + ", expected " + std::to_string(m));
        } else {
          try {
            Element via = mul(*S, projection(P, m, x), projection(P, m, y));
            if (!(via == xy))
              layer_product.fail("projections disagree with the product at (" + x.str() + ", " +
                                 y.str() + ")");
          } catch (const Error& e) {
            layer_product.fail(e.what());
          }
        }
      }
    }

  Item no_neutral("terminal-no-neutral");
  if (P.terminal) {
    ++no_neutral.item.cases;
    if (P.finite) {
      Element e;
      if (find_neutral(S, P.terminal_elements, e))
        no_neutral.fail("terminal keeps the neutral element " + e.str());
    } else if (P.terminal->neutral()) {
      no_neutral.fail("terminal handle " + P.terminal->name() + " reports a neutral element");
    }
  }

  Item powers("unit-powers");
  for (const PeelLayer& L : P.layers) {
    const auto members = members_of(L);
    for (const Element& x : members) {
      ++powers.item.cases;
      Element p = x;
      bool reached = (p == L.neutral);
      for (std::size_t step = 0; step + 1 < members.size() + 2 && !reached; ++step) {
        p = mul(*S, p, x);
        reached = (p == L.neutral);
      }
      if (!reached)
        powers.fail("no power of " + x.str() + " reaches the layer neutral " + L.neutral.str());
    }
  }

  Item sandwich("sandwich-identity");
  Item morphism("projection-morphism");
  for (const PeelLayer& L : P.layers) {
    for (const Element& x : universe) {
      ++sandwich.item.cases;
      try {
        projection(P, L.index, x);
      } catch (const Error& e) {
        sandwich.fail(e.what());
      }
    }
    ++morphism.item.cases;
    try {
      if (!(projection(P, L.index, P.layers[0].neutral) == L.neutral))
        morphism.fail("projection " + std::to_string(L.index) + " moves the identity away from " +
                      L.neutral.str());
    } catch (const Error& e) {
      morphism.fail(e.what());
    }
    for (const Element& x : universe)
      for (const Element& y : universe) {
        ++morphism.item.cases;
        try {
          Element lhs = projection(P, L.index, mul(*S, x, y));
          Element rhs = mul(*S, projection(P, L.index, x), projection(P, L.index, y));
          if (!(lhs == rhs))
            morphism.fail("projection " + std::to_string(L.index) + " is not multiplicative at (" +
                          x.str() + ", " + y.str() + ")");
        } catch (const Error& e) {
          morphism.fail(e.what());
        }
      }
  }

  Item compat("morphism-compatibility");
  for (std::size_t i = 0; i < P.layers.size(); ++i)
    for (std::size_t j = i; j < P.layers.size(); ++j)
      for (std::size_t k = j; k < P.layers.size(); ++k)
        for (const Element& x : members_of(P.layers[i])) {
          ++compat.item.cases;
          try {
            Element two = layer_morphism(P, static_cast<long long>(k),
                                         static_cast<long long>(j),
                                         layer_morphism(P, static_cast<long long>(j),
                                                        static_cast<long long>(i), x));
            Element one = layer_morphism(P, static_cast<long long>(k),
                                         static_cast<long long>(i), x);
            if (!(two == one))
              compat.fail("layer morphisms " + std::to_string(k) + "<-" + std::to_string(j) +
                          "<-" + std::to_string(i) + " disagree at " + x.str());
          } catch (const Error& e) {
            compat.fail(e.what());
          }
        }

  rep.items = {partition.item,  groups.item,   closure.item, no_neutral.item, powers.item,
               sandwich.item,   morphism.item, layer_product.item, absorbs.item,
               compat.item};
  return rep;
}

RebuildResult rebuild_as_ddl(const SemigroupPtr& S) {
  RebuildResult R;
  R.peeling = peel(S);
  if (!R.peeling.finite)
    throw Error("CapabilityMissing", "rebuilding needs a finite handle, got " + S->name());
  if (!R.peeling.terminal_empty())
    throw Error("NonEmptyTerminal",
                S->name() + " keeps a neutral-free terminal tail of size " +
                    std::to_string(R.peeling.terminal_elements.size()) +
                    "; the glued-group form covers only handles that peel to layers");

  auto P = std::make_shared<PeelingResult>(R.peeling);
  const long long n_layers = static_cast<long long>(P->layers.size());

  DdlSystem sys;
  sys.name = S->name() + "-glued";
  IndexSemilattice idx;
  idx.description = "chain 0..=" + std::to_string(n_layers - 1) + ", join = max";
  idx.finite = true;
  idx.labels_up_to = [n_layers](long long) {
    std::vector<std::string> out;
    for (long long i = 0; i < n_layers; ++i) out.push_back(std::to_string(i));
    return out;
  };
  idx.leq = [](const std::string& a, const std::string& b) {
    return std::stoll(a) <= std::stoll(b);
  };
  idx.join = [](const std::string& a, const std::string& b) {
    return std::stoll(a) >= std::stoll(b) ? a : b;
  };
  sys.index = idx;
  sys.component = [P](const std::string& l) -> SemigroupPtr {
    long long i = std::stoll(l);
    if (i < 0 || i >= static_cast<long long>(P->layers.size()))
      throw Error("UnknownLayer", "no layer " + l);
    return P->layers[static_cast<std::size_t>(i)].group;
  };
  sys.morphism_fn = [P](const std::string& alpha, const std::string& beta, const Element& x) {
    return layer_morphism(*P, std::stoll(alpha), std::stoll(beta), x);
  };
  R.system = sys;

  const std::vector<Element> elems = S->elements();
  R.original_table = render_cayley_table(*S, elems);

  // same table, every product routed through the glued system
  auto lift = [&](const Element& x) {
    return Element::ddl_pair(std::to_string(P->layer_of(x)), x);
  };
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ' ';
    out += elems[i].str();
  }
  out += '\n';
  for (const Element& a : elems) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (j) out += ' ';
      Element star = sys.mul(lift(a), lift(elems[j]));
      out += star.as_ddl_pair().inner->str();
      ++R.cases;
    }
    out += '\n';
  }
  R.rebuilt_table = out;
  R.tables_match = (R.original_table == R.rebuilt_table);
  return R;
}

}  // namespace findec
