#pragma once

#include <optional>
#include <string>
#include <vector>

#include "findec/ddl.hpp"
#include "findec/element.hpp"
#include "findec/semigroup.hpp"

namespace findec {

/// One peeled layer: the unit group of the n-th tail together with that
/// tail's neutral element.
struct PeelLayer {
  long long index = 0;
  Element neutral;
  SemigroupPtr group;
};

/// Peeling of a monoid into a chain of unit groups plus a terminal tail
/// without neutral element. Invariants, checked by
/// verify_structure_theorem:
///   tail(n) = union of layers n.. plus the terminal, closed under product;
///   layer n = units of tail(n) with neutral `layers[n].neutral`;
///   the terminal has no neutral element.
struct PeelingResult {
  SemigroupPtr source;
  std::vector<PeelLayer> layers;
  std::vector<Element> terminal_elements;  // enumerated only for finite sources
  SemigroupPtr terminal;                   // null when the terminal is empty
  bool finite = false;

  bool terminal_empty() const { return terminal == nullptr; }

  /// Layer index of x, or -1 when x sits in the terminal tail.
  long long layer_of(const Element& x) const;
};

/// Repeatedly removes the unit group of the current tail. Finite handles are
/// peeled exhaustively. Infinite handles need a neutral element plus
/// units/nonunits oracles, otherwise CapabilityMissing; a neutral-free
/// infinite handle is returned whole as its own terminal.
PeelingResult peel(const SemigroupPtr& S);

/// e_n x e_n for the n-th tail neutral. Checks the sandwich identities
/// e_n x = x e_n = e_n x e_n and membership in tail(n); a violation throws
/// FalsifiedLemma.
Element projection(const PeelingResult& P, long long n, const Element& x);

/// Restriction of projection to a layer: maps layer `source` into layer
/// `target` (source <= target). Lands outside the target layer only if the
/// structure claims fail, which throws FalsifiedClaim.
Element layer_morphism(const PeelingResult& P, long long target, long long source,
                       const Element& x);

struct StructureReport {
  PeelingResult peeling;
  long long bound = 0;  // ball radius used for infinite sources, 0 = exhaustive
  std::vector<CheckItem> items;
  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

/// Checks the full decomposition story on one handle:
///   partition, group laws per layer, tail closure, neutral-free terminal,
///   unit powers reaching the tail neutral, the sandwich identities, the
///   projections being morphisms, products of layers landing in the deeper
///   layer via the projections, terminal absorption, and compatibility of
///   the layer morphisms.
StructureReport verify_structure_theorem(const SemigroupPtr& S, long long bound = 8);

struct RebuildResult {
  PeelingResult peeling;
  DdlSystem system;
  std::string original_table;  // Cayley table of the source
  std::string rebuilt_table;   // same table recomputed through the glued system
  long long cases = 0;
  bool tables_match = false;
};

/// Re-expresses a finite monoid with empty terminal as the glued system of
/// its layers over the chain 0 <= 1 <= ... (join = max), then recomputes the
/// whole multiplication table through the glued product. Refuses handles
/// with a nonempty terminal (NonEmptyTerminal) or without finite
/// enumeration.
RebuildResult rebuild_as_ddl(const SemigroupPtr& S);

}  // namespace findec
