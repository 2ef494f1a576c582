#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "findec/semigroup.hpp"

namespace findec {

/// One named verification step inside a report.
struct CheckItem {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::string witness;  // first counterexample, empty when pass
};

/// Upper semilattice of labels. Infinite index sets are described by a
/// bounded enumerator; `finite` marks the case where labels_up_to already
/// returns the whole set.
struct IndexSemilattice {
  std::string description;
  std::function<bool(const std::string&, const std::string&)> leq;  // a is below b
  std::function<std::string(const std::string&, const std::string&)> join;
  std::function<std::vector<std::string>(long long)> labels_up_to;
  bool finite = false;
};

/// A family of pairwise-disjoint semigroups S_label glued along morphisms
/// phi[alpha][beta] : S_beta -> S_alpha (defined for beta below alpha). The
/// disjointness is structural: every element is tagged with its label, so
/// the product can route both operands into the join component:
///   x * y = phi[j][label x](x) . phi[j][label y](y),   j = join of labels.
class DdlSystem {
 public:
  std::string name;
  IndexSemilattice index;
  std::function<SemigroupPtr(const std::string&)> component;
  std::function<Element(const std::string&, const std::string&, const Element&)> morphism_fn;
  /// Fiber of y in S_alpha under phi[alpha][beta], listed within the source
  /// component's ball of the given bound; null means "scan the ball".
  std::function<std::vector<Element>(const std::string&, const std::string&, const Element&,
                                     long long)>
      fiber_fn;
  /// True when fiber_fn returns the whole fiber regardless of bound.
  bool fiber_exact = false;

  /// Tagged element with membership validated against the component.
  Element make(const std::string& label, const Element& inner) const;

  /// "(label|inner)"; inner syntax is the component's.
  Element parse(const std::string& text) const;

  Element morphism(const std::string& alpha, const std::string& beta, const Element& x) const;
  std::vector<Element> fiber(const std::string& alpha, const std::string& beta, const Element& y,
                             long long bound) const;

  Element mul(const Element& x, const Element& y) const;

  /// Finite label set and all components finite.
  bool finite() const;

  /// Tagged union of component balls over labels_up_to(bound), deterministic
  /// order (labels in enumerator order, elements canonical).
  std::vector<Element> ball(long long bound) const;
};

struct ValidationReport {
  long long bound = 0;
  bool exhaustive = false;
  std::vector<CheckItem> items;
  bool ok() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

/// Checks the semilattice laws, the morphism axioms (identity,
/// compatibility, multiplicativity), and associativity of the glued product
/// on bounded data (exhaustive when the system is finite).
ValidationReport validate_system(const DdlSystem& sys, long long bound);

/// Verdict for one condition of the finite-decomposition criterion:
///   (i)  for each y, finitely many source labels with nonempty fiber;
///   (ii) every component has the finite decomposition property;
///   (iii) every fiber is finite.
/// Bounded checks compare counts at the bound against counts at twice the
/// bound: stability gives verified-to-bound, growth gives
/// violated-with-witness. Fully finite systems get verified-exhaustive.
struct CriterionVerdict {
  std::string condition;
  std::string verdict;
  long long cases = 0;
  std::string witness;
};

struct CriterionReport {
  long long bound = 0;
  std::vector<CriterionVerdict> conditions;
  bool all_verified() const {
    for (const auto& c : conditions)
      if (c.verdict == "violated-with-witness") return false;
    return true;
  }
};

CriterionReport fd_criterion_check(const DdlSystem& sys, long long bound);

/// Ordered pairs (u, v) with u * v == z, u and v drawn from ball(bound).
std::vector<std::pair<Element, Element>> brute_decompositions(const DdlSystem& sys,
                                                              const Element& z, long long bound);

/// The running example: component k is {y >= k} under addition, labels are
/// the naturals in the reversed order (bigger integer = lower label), join is
/// integer min, and the morphisms keep the payload. Every initial interval
/// of the index is infinite, yet the glued semigroup has finite
/// decompositions.
DdlSystem fig1_system();

/// Three systems, each violating exactly one criterion condition:
///   defect-i    every label keeps a copy of the full additive naturals and
///               all fibers are nonempty, so nonempty-fiber label sets grow
///               without bound;
///   defect-ii   a single component without the finite decomposition
///               property (integer-exponent monomials);
///   defect-iii  a constant morphism from an infinite component onto a
///               one-point component, giving an infinite fiber.
DdlSystem defect_system(const std::string& which);  // "i", "ii", "iii"

/// For each demo system: an element of the glued semigroup whose
/// decomposition list keeps growing with the bound.
Element defect_witness_element(const std::string& which);

/// At least `bound` distinct factor pairs that all multiply to the witness
/// element; exhibits the failure constructively.
std::vector<std::pair<Element, Element>> defect_decomposition_family(const std::string& which,
                                                                     long long bound);

/// Declarative finite systems:
///   labels a b c
///   component a zmul-4
///   leq a b
///   join a b b
///   morphism b a 0:0 1:2
/// '#' starts a comment. Reflexive order pairs, join of comparable pairs,
/// and identity self-morphisms are implied.
DdlSystem load_ddl_file(const std::string& path);

/// Resolves "fig1", "defect-i/ii/iii" to demo systems, anything else to a
/// file path.
DdlSystem resolve_ddl(const std::string& spec);

}  // namespace findec
