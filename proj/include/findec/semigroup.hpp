#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "findec/element.hpp"

namespace findec {

class Semigroup;
using SemigroupPtr = std::shared_ptr<const Semigroup>;

/// A semigroup with optional extras: a neutral element, full enumeration when
/// the carrier is finite, bounded "ball" enumeration when it is not, and a
/// decomposer listing all ordered two-factorizations of an element.
///
/// The decomposer is the heart of the finite-decomposition property: carriers
/// where some element has infinitely many factorizations (Laurent monomials,
/// say) refuse with a NonFiniteDecomposition error instead of looping.
class Semigroup {
 public:
  virtual ~Semigroup() = default;

  virtual std::string name() const = 0;

  /// Neutral element if the operation has one.
  virtual std::optional<Element> neutral() const = 0;

  virtual bool contains(const Element& x) const = 0;

  /// Product of two carrier elements. Callers go through mul() below, which
  /// adds the membership checks.
  virtual Element mul_raw(const Element& a, const Element& b) const = 0;

  /// Whether every element has finitely many ordered two-factorizations.
  virtual bool finite_decomposition() const = 0;

  virtual bool has_decomposer() const { return finite_decomposition(); }

  /// All ordered pairs (p, q) with p*q == x, in no particular order.
  /// Throws NonFiniteDecomposition when the set is infinite, and
  /// CapabilityMissing when no decomposer is implemented.
  virtual std::vector<std::pair<Element, Element>> decompose_raw(const Element& x) const;

  /// True when the whole carrier is finite and enumerable.
  virtual bool finite() const = 0;

  /// Full carrier; only valid when finite().
  virtual std::vector<Element> elements() const;

  /// Deterministic bounded slice of the carrier, used by exhaustive sweeps.
  /// For finite carriers this is the whole carrier regardless of bound.
  virtual std::vector<Element> ball(long long bound) const = 0;

  /// Parse an element of this carrier from its canonical text form.
  virtual Element parse(const std::string& text) const = 0;

  /// Backends with special structure can list their units without the ball
  /// search (used for infinite carriers). Empty optional means "use the
  /// generic route".
  virtual std::optional<std::vector<Element>> units_oracle() const { return std::nullopt; }

  /// For infinite carriers with a neutral element: the subsemigroup of
  /// non-units, when the backend knows it in closed form. Peeling uses this
  /// to take one layer off an infinite monoid.
  virtual std::optional<SemigroupPtr> nonunits_oracle() const { return std::nullopt; }

  bool is_neutral(const Element& x) const {
    auto e = neutral();
    return e && *e == x;
  }
};

/// Membership-checked product.
Element mul(const Semigroup& S, const Element& a, const Element& b);

/// Membership-checked decomposition, sorted canonically by (p, q).
std::vector<std::pair<Element, Element>> decompose(const Semigroup& S, const Element& x);

/// Checks p*q == x for every listed pair, that there are no duplicates, and
/// that the list is complete against a brute-force scan (over the whole
/// carrier when finite, over ball(scan_bound) when scan_bound >= 0).
/// Throws on failure.
void verify_decomposer(const Semigroup& S, const Element& x, long long scan_bound = -1);

/// Invertibility by factorization: u is a unit iff it appears as a left
/// factor of the neutral element. Needs a neutral element and a decomposer.
bool is_invertible(const Semigroup& S, const Element& u);

/// Inverse of a unit, found by iterating powers of u until the neutral
/// element reappears: if u^p == e then u^(p-1) is the inverse. Finiteness of
/// the factorization set of e makes the loop terminate.
Element inverse(const Semigroup& S, const Element& u);

/// All units, via units_oracle() or, failing that, decompose(neutral).
std::vector<Element> units(const Semigroup& S);

/// Finite semigroup backed by an explicit Cayley table. Construction verifies
/// associativity and reports an offending triple on failure.
class FiniteTableSemigroup : public Semigroup,
                             public std::enable_shared_from_this<FiniteTableSemigroup> {
 public:
  FiniteTableSemigroup(std::string name, std::vector<std::string> elem_names,
                       std::vector<std::vector<int>> table);

  std::string name() const override { return name_; }
  std::optional<Element> neutral() const override;
  bool contains(const Element& x) const override;
  Element mul_raw(const Element& a, const Element& b) const override;
  bool finite_decomposition() const override { return true; }
  std::vector<std::pair<Element, Element>> decompose_raw(const Element& x) const override;
  bool finite() const override { return true; }
  std::vector<Element> elements() const override;
  std::vector<Element> ball(long long bound) const override;
  Element parse(const std::string& text) const override;

  int size() const { return static_cast<int>(names_.size()); }
  int law_index(int a, int b) const { return table_[a][b]; }
  const std::vector<std::string>& names() const { return names_; }
  Element elem(int index) const;
  int index_of(const std::string& name) const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::optional<int> neutral_;
};

/// Closed subset of a parent semigroup, sharing its operation. Closure under
/// the product is verified at construction.
class SubSemigroup : public Semigroup {
 public:
  SubSemigroup(std::string name, SemigroupPtr parent, std::vector<Element> members);

  std::string name() const override { return name_; }
  std::optional<Element> neutral() const override;
  bool contains(const Element& x) const override;
  Element mul_raw(const Element& a, const Element& b) const override;
  bool finite_decomposition() const override { return true; }
  std::vector<std::pair<Element, Element>> decompose_raw(const Element& x) const override;
  bool finite() const override { return true; }
  std::vector<Element> elements() const override { return members_; }
  std::vector<Element> ball(long long bound) const override;
  Element parse(const std::string& text) const override;

  const Semigroup& parent() const { return *parent_; }

 private:
  std::string name_;
  SemigroupPtr parent_;
  std::vector<Element> members_;
};

/// Named backends:
///   nat-plus     positive integers under addition (no neutral)
///   nat-monoid   nonnegative integers under addition
///   mon-plus     nonempty monomials x1^a1*x2^a2*... under multiplication
///   mon          all monomials including 1
///   mon-laurent  monomials with integer exponents; decomposition sets are
///                infinite, so decompose refuses
///   zmul-N       integers mod N under multiplication (2 <= N)
///   tN           all maps {0..N-1} -> {0..N-1} under left-to-right
///                composition, named by their image strings (1 <= N <= 4)
///   min-chain-N  {0..N-1} under min
///   left-zero-N  left zero law a*b = a on N letters
///   table:PATH   Cayley table loaded from PATH
SemigroupPtr builtin(const std::string& spec);

/// Cayley table text format: '#' comments and blank lines ignored; first data
/// line holds the N element names; the next N lines hold N names each, row a
/// column b giving a*b.
std::shared_ptr<const FiniteTableSemigroup> load_cayley_table(const std::string& path);

/// Renders a finite semigroup in the same format load_cayley_table reads,
/// with elements in the order given.
std::string render_cayley_table(const Semigroup& S, const std::vector<Element>& order);

}  // namespace findec
