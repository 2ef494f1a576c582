#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "findec/rational.hpp"

namespace findec {

/// Finitely supported exponent vector over the variables x1, x2, ...
/// Zero exponents are never stored, so the support is exactly the key set.
class Multiindex {
 public:
  Multiindex() = default;
  explicit Multiindex(std::map<int, long long> exps);

  bool empty() const { return exps_.empty(); }
  const std::map<int, long long>& exps() const { return exps_; }
  bool all_positive() const;
  /// Total degree sum of exponents (signed for Laurent monomials).
  long long degree() const;
  /// Weight sum of i*|e_i|; grades the monomial semigroups with finite balls.
  long long weight() const;

  Multiindex plus(const Multiindex& other) const;
  /// Componentwise difference; only meaningful when this dominates other.
  Multiindex minus(const Multiindex& other) const;
  bool dominates(const Multiindex& other) const;

  std::string str() const;  // "x1^2*x3", "1" when empty, "x1^-2" for Laurent
  bool operator==(const Multiindex& o) const { return exps_ == o.exps_; }
  bool operator<(const Multiindex& o) const { return exps_ < o.exps_; }

 private:
  std::map<int, long long> exps_;
};

Multiindex parse_multiindex(const std::string& s, bool allow_negative);

/// One value inhabiting one concrete semigroup. The payload alternative is
/// the variant discriminator; canonical serialization (str) orders elements
/// and keys every coefficient map in the project.
class Element {
 public:
  struct TableElem {
    int index;
    std::string name;
  };
  using Word = std::vector<std::string>;                           // letters
  using Composition = std::vector<long long>;                      // entries >= 1
  using Bicomposition = std::vector<std::pair<long long, long long>>;
  using MonWord = std::vector<Multiindex>;                         // nonempty letters
  struct DdlPair {
    std::string label;
    std::shared_ptr<const Element> inner;
  };
  using Payload =
      std::variant<unsigned long long, TableElem, Multiindex, Word, Composition,
                   Bicomposition, MonWord, DdlPair>;

  Element() : payload_(0ull), key_("0") {}
  explicit Element(Payload p);

  static Element natural(unsigned long long n) { return Element(Payload(n)); }
  static Element table(int index, std::string name);
  static Element monomial(Multiindex m) { return Element(Payload(std::move(m))); }
  static Element word(Word w) { return Element(Payload(std::move(w))); }
  static Element composition(Composition c) { return Element(Payload(std::move(c))); }
  static Element bicomposition(Bicomposition b) { return Element(Payload(std::move(b))); }
  static Element monword(MonWord w) { return Element(Payload(std::move(w))); }
  static Element ddl_pair(std::string label, Element inner);

  const Payload& payload() const { return payload_; }

  bool is_natural() const { return std::holds_alternative<unsigned long long>(payload_); }
  bool is_table() const { return std::holds_alternative<TableElem>(payload_); }
  bool is_monomial() const { return std::holds_alternative<Multiindex>(payload_); }
  bool is_word() const { return std::holds_alternative<Word>(payload_); }
  bool is_composition() const { return std::holds_alternative<Composition>(payload_); }
  bool is_bicomposition() const { return std::holds_alternative<Bicomposition>(payload_); }
  bool is_monword() const { return std::holds_alternative<MonWord>(payload_); }
  bool is_ddl_pair() const { return std::holds_alternative<DdlPair>(payload_); }

  unsigned long long as_natural() const;
  const TableElem& as_table() const;
  const Multiindex& as_monomial() const;
  const Word& as_word() const;
  const Composition& as_composition() const;
  const Bicomposition& as_bicomposition() const;
  const MonWord& as_monword() const;
  const DdlPair& as_ddl_pair() const;

  /// Canonical serialization: naturals in decimal, monomials as "x1^2*x3",
  /// words space-separated (empty word prints "1"), compositions "(2,3)",
  /// bicompositions "(2/1,3/0)", monomial words "[x1^2][x1]", tagged pairs
  /// "(k|inner)". Lexicographic order on this string is the canonical order.
  /// Rendered once at construction; payloads never change afterwards.
  const std::string& str() const { return key_; }

  bool operator==(const Element& o) const { return key_ == o.key_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

 private:
  Payload payload_;
  std::string key_;
};

/// Canonical comparison used for printing and deterministic output.
inline bool canonical_less(const Element& a, const Element& b) {
  return a.str() < b.str();
}

// Context-directed parsers for the canonical and CLI syntaxes. Each accepts
// the exact strings produced by Element::str for its kind.
Element parse_natural_elem(const std::string& s);
Element parse_word_elem(const std::string& s);
Element parse_composition_elem(const std::string& s);
Element parse_bicomposition_elem(const std::string& s);
Element parse_monword_elem(const std::string& s);

}  // namespace findec
