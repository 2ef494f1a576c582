#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "findec/element.hpp"

namespace findec {

/// Execution mode for the sweep kernels. The parallel mode fans the case
/// list out over OpenMP threads; reports stay byte-identical to serial runs
/// because failures are re-ordered by case index afterwards.
enum class Exec { serial, parallel };

Exec exec_from_name(const std::string& name);
std::string exec_name(Exec exec);

struct CheckReport {
  std::string name;
  long long cases = 0;
  std::vector<std::string> failures;  // first failures in case order, capped
  long long failure_count = 0;        // total, including capped-away ones
  double seconds = 0.0;
  bool pass() const { return failure_count == 0; }
};

/// Runs `total` independent cases through `fn`; nullopt means pass. Thrown
/// Error values count as failures with their message as witness.
CheckReport run_sweep(const std::string& name, long long total, Exec exec,
                      const std::function<std::optional<std::string>(long long)>& fn);

/// <P*Q|R> = <P (x) Q|Delta R> on basis triples up to the weight bound over
/// the additive naturals, exhaustively over Z/n (n <= 12) and the
/// three-point transformation monoid, plus seeded random polynomials.
CheckReport check_duality(long long weight_bound, unsigned long long seed, Exec exec);

/// (Delta (x) id) Delta = (id (x) Delta) Delta on the same universes.
CheckReport check_coassociativity(long long weight_bound, Exec exec);

/// Convolution through factorization sets agrees with the direct product of
/// finitely supported functions, pointwise and as polynomials.
CheckReport check_convolution(long long weight_bound, unsigned long long seed, Exec exec);

/// Commutativity, associativity, unit, coefficient counts, grading, and the
/// bicomposition -> composition projection for all four products.
CheckReport check_qs_laws(long long length_bound, Exec exec);

/// Recursive products agree with the interleaving-with-merges enumerator.
CheckReport check_qs_oracle(long long length_bound, Exec exec);

/// li(u,z)*li(v,z) = li(u shuffle v, z) within series truncation budgets.
CheckReport check_chen(long long length_bound, long long N, double tol, Exec exec);

/// zeta(s)*zeta(t) = zeta(s stuffle t) within combined tail bounds, plus the
/// pinned zeta(2)^2 = 2 zeta(2,2) + zeta(4) case against pi^4/36.
CheckReport check_stuffle(long long weight_bound, long long N, Exec exec);

/// Series evaluation vs adaptive quadrature of the iterated-integral form.
CheckReport check_quadrature(Exec exec);

/// The graded-naturals demo system: validation, criterion verdicts, pinned
/// products, and brute decomposition counts against the closed form.
CheckReport check_fig1(long long bound);

/// Each seeded defect is detected on exactly its own criterion condition,
/// and the constructive witness family multiplies out correctly.
CheckReport check_defects(long long bound);

/// Declarative fixture files: everything under good/ validates, everything
/// under defects/ is rejected with a witness.
CheckReport check_files(const std::string& fixtures_dir);

/// Full peeling story on the finite fixture battery.
CheckReport check_structure(Exec exec);

/// Peel-then-reglue round trip on chains and abelian groups; documented
/// refusal on fixtures with nonempty terminal.
CheckReport check_rebuild(Exec exec);

/// Factorization-based invertibility vs brute-force inverse search.
CheckReport check_invertibility(long long bound, Exec exec);

/// The whole suite at one effort bound. Bound 0 runs zero cases everywhere
/// (vacuous pass); the fixture directory is optional.
std::vector<CheckReport> check_all(long long bound, Exec exec, unsigned long long seed,
                                   const std::string& fixtures_dir = "");

}  // namespace findec
