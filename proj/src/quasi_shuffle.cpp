#include "findec/quasi_shuffle.hpp"

#include <functional>
#include <map>
#include <optional>

namespace findec {

QsKind qs_kind_from_name(const std::string& name) {
  if (name == "shuffle") return QsKind::shuffle;
  if (name == "stuffle") return QsKind::stuffle;
  if (name == "diamond") return QsKind::diamond;
  if (name == "ldiag") return QsKind::ldiag;
  throw Error("UnknownProduct", "no product named '" + name +
                                    "' (expected shuffle, stuffle, diamond, or ldiag)");
}

std::string qs_kind_name(QsKind kind) {
  switch (kind) {
    case QsKind::shuffle: return "shuffle";
    case QsKind::stuffle: return "stuffle";
    case QsKind::diamond: return "diamond";
    default: return "ldiag";
  }
}

bool qs_has_merge(QsKind kind) { return kind != QsKind::shuffle; }

Element qs_unit(QsKind kind) {
  switch (kind) {
    case QsKind::shuffle: return Element::word({});
    case QsKind::stuffle: return Element::composition({});
    case QsKind::diamond: return Element::bicomposition({});
    default: return Element::monword({});
  }
}

Element qs_parse_word(QsKind kind, const std::string& text) {
  switch (kind) {
    case QsKind::shuffle: return parse_word_elem(text);
    case QsKind::stuffle: return parse_composition_elem(text);
    case QsKind::diamond: return parse_bicomposition_elem(text);
    default: return parse_monword_elem(text);
  }
}

void qs_require_word(QsKind kind, const Element& w) {
  bool ok = false;
  switch (kind) {
    case QsKind::shuffle: ok = w.is_word(); break;
    case QsKind::stuffle: ok = w.is_composition(); break;
    case QsKind::diamond: ok = w.is_bicomposition(); break;
    default: ok = w.is_monword(); break;
  }
  if (!ok)
    throw Error("LetterDomainMismatch",
                w.str() + " is not a word of the " + qs_kind_name(kind) + " letter domain");
}

std::size_t qs_length(const Element& w) {
  if (w.is_word()) return w.as_word().size();
  if (w.is_composition()) return w.as_composition().size();
  if (w.is_bicomposition()) return w.as_bicomposition().size();
  if (w.is_monword()) return w.as_monword().size();
  throw Error("LetterDomainMismatch", w.str() + " is not a word");
}

namespace {

template <class L>
struct WordTraits;

template <>
struct WordTraits<std::string> {
  static const std::vector<std::string>& vec(const Element& e) { return e.as_word(); }
  static Element make(std::vector<std::string> v) { return Element::word(std::move(v)); }
  static std::string merge(const std::string&, const std::string&) {
    throw Error("LetterDomainMismatch", "shuffle letters carry no product");
  }
};

template <>
struct WordTraits<long long> {
  static const std::vector<long long>& vec(const Element& e) { return e.as_composition(); }
  static Element make(std::vector<long long> v) { return Element::composition(std::move(v)); }
  static long long merge(long long a, long long b) { return a + b; }
};

template <>
struct WordTraits<std::pair<long long, long long>> {
  static const std::vector<std::pair<long long, long long>>& vec(const Element& e) {
    return e.as_bicomposition();
  }
  static Element make(std::vector<std::pair<long long, long long>> v) {
    return Element::bicomposition(std::move(v));
  }
  static std::pair<long long, long long> merge(const std::pair<long long, long long>& a,
                                               const std::pair<long long, long long>& b) {
    return {a.first + b.first, a.second + b.second};
  }
};

template <>
struct WordTraits<Multiindex> {
  static const std::vector<Multiindex>& vec(const Element& e) { return e.as_monword(); }
  static Element make(std::vector<Multiindex> v) { return Element::monword(std::move(v)); }
  static Multiindex merge(const Multiindex& a, const Multiindex& b) { return a.plus(b); }
};

template <class L>
using RawPoly = std::map<std::vector<L>, unsigned long long>;

template <class L>
Polynomial to_polynomial(const RawPoly<L>& raw) {
  Polynomial out;
  for (const auto& [w, c] : raw)
    out.add_term(WordTraits<L>::make(w), Rational(static_cast<unsigned long>(c)));
  return out;
}

template <class L>
Polynomial qs_recurse(const std::vector<L>& u, const std::vector<L>& v, bool with_merge) {
  const std::size_t P = u.size(), Q = v.size();
  std::vector<std::optional<RawPoly<L>>> memo((P + 1) * (Q + 1));
  std::function<const RawPoly<L>&(std::size_t, std::size_t)> rec =
      [&](std::size_t i, std::size_t j) -> const RawPoly<L>& {
    auto& slot = memo[i * (Q + 1) + j];
    if (slot) return *slot;
    RawPoly<L> out;
    if (i == P) {
      out[std::vector<L>(v.begin() + j, v.end())] = 1;
    } else if (j == Q) {
      out[std::vector<L>(u.begin() + i, u.end())] = 1;
    } else {
      auto prepend = [&out](const L& a, const RawPoly<L>& p) {
        for (const auto& [w, c] : p) {
          std::vector<L> nw;
          nw.reserve(w.size() + 1);
          nw.push_back(a);
          nw.insert(nw.end(), w.begin(), w.end());
          out[std::move(nw)] += c;
        }
      };
      prepend(u[i], rec(i + 1, j));
      prepend(v[j], rec(i, j + 1));
      if (with_merge) prepend(WordTraits<L>::merge(u[i], v[j]), rec(i + 1, j + 1));
    }
    slot = std::move(out);
    return *slot;
  };
  return to_polynomial(rec(0, 0));
}

template <class L>
Polynomial qs_enumerate(const std::vector<L>& u, const std::vector<L>& v, bool with_merge) {
  RawPoly<L> acc;
  std::vector<L> cur;
  cur.reserve(u.size() + v.size());
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t i, std::size_t j) {
    if (i == u.size() && j == v.size()) {
      ++acc[cur];
      return;
    }
    if (i < u.size()) {
      cur.push_back(u[i]);
      gen(i + 1, j);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      gen(i, j + 1);
      cur.pop_back();
    }
    if (with_merge && i < u.size() && j < v.size()) {
      cur.push_back(WordTraits<L>::merge(u[i], v[j]));
      gen(i + 1, j + 1);
      cur.pop_back();
    }
  };
  gen(0, 0);
  return to_polynomial(acc);
}

template <class Fn>
Polynomial dispatch(QsKind kind, const Element& u, const Element& v, Fn&& fn) {
  qs_require_word(kind, u);
  qs_require_word(kind, v);
  switch (kind) {
    case QsKind::shuffle: return fn(u.as_word(), v.as_word(), false);
    case QsKind::stuffle: return fn(u.as_composition(), v.as_composition(), true);
    case QsKind::diamond: return fn(u.as_bicomposition(), v.as_bicomposition(), true);
    default: return fn(u.as_monword(), v.as_monword(), true);
  }
}

}  // namespace

Polynomial quasi_shuffle(QsKind kind, const Element& u, const Element& v) {
  return dispatch(kind, u, v, [](const auto& a, const auto& b, bool merge) {
    return qs_recurse(a, b, merge);
  });
}

Polynomial quasi_shuffle(QsKind kind, const Polynomial& P, const Polynomial& Q) {
  Polynomial out;
  for (const auto& [u, c] : P.terms())
    for (const auto& [v, d] : Q.terms()) out += quasi_shuffle(kind, u, v).scaled(Rational(c * d));
  return out;
}

Polynomial qs_interleaving_oracle(QsKind kind, const Element& u, const Element& v) {
  return dispatch(kind, u, v, [](const auto& a, const auto& b, bool merge) {
    return qs_enumerate(a, b, merge);
  });
}

unsigned long long qs_tag_string_count(std::size_t p, std::size_t q, bool with_merges) {
  auto factorial = [](std::size_t n) {
    unsigned long long f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  if (!with_merges) return factorial(p + q) / (factorial(p) * factorial(q));
  unsigned long long total = 0;
  for (std::size_t b = 0; b <= std::min(p, q); ++b)
    total += factorial(p + q - b) / (factorial(b) * factorial(p - b) * factorial(q - b));
  return total;
}

std::vector<Element> qs_letter_words(const Element& w) {
  std::vector<Element> out;
  if (w.is_word())
    for (const auto& a : w.as_word()) out.push_back(Element::word({a}));
  else if (w.is_composition())
    for (auto a : w.as_composition()) out.push_back(Element::composition({a}));
  else if (w.is_bicomposition())
    for (const auto& a : w.as_bicomposition()) out.push_back(Element::bicomposition({a}));
  else if (w.is_monword())
    for (const auto& a : w.as_monword()) out.push_back(Element::monword({a}));
  else
    throw Error("LetterDomainMismatch", w.str() + " is not a word");
  return out;
}

namespace {

template <class L>
Element concat_impl(const Element& a, const Element& b) {
  std::vector<L> v = WordTraits<L>::vec(a);
  const std::vector<L>& w = WordTraits<L>::vec(b);
  v.insert(v.end(), w.begin(), w.end());
  return WordTraits<L>::make(std::move(v));
}

}  // namespace

Element qs_concat(const Element& a, const Element& b) {
  if (a.is_word() && b.is_word()) return concat_impl<std::string>(a, b);
  if (a.is_composition() && b.is_composition()) return concat_impl<long long>(a, b);
  if (a.is_bicomposition() && b.is_bicomposition())
    return concat_impl<std::pair<long long, long long>>(a, b);
  if (a.is_monword() && b.is_monword()) return concat_impl<Multiindex>(a, b);
  throw Error("LetterDomainMismatch",
              "cannot concatenate " + a.str() + " and " + b.str() + " (different word kinds)");
}

Element qs_merge_letters(QsKind kind, const Element& a, const Element& b) {
  qs_require_word(kind, a);
  qs_require_word(kind, b);
  if (qs_length(a) != 1 || qs_length(b) != 1)
    throw Error("LetterDomainMismatch", "merge expects single-letter words");
  switch (kind) {
    case QsKind::shuffle:
      throw Error("LetterDomainMismatch", "shuffle letters carry no product");
    case QsKind::stuffle:
      return Element::composition({a.as_composition()[0] + b.as_composition()[0]});
    case QsKind::diamond:
      return Element::bicomposition(
          {WordTraits<std::pair<long long, long long>>::merge(a.as_bicomposition()[0],
                                                              b.as_bicomposition()[0])});
    default:
      return Element::monword({a.as_monword()[0].plus(b.as_monword()[0])});
  }
}

}  // namespace findec
