#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperforge/forms.hpp"
#include "hyperforge/structure.hpp"

namespace hyperforge {
namespace hauptsatz {

/// One generator of I^n: sign * scalar * <<gens>>.
struct Term {
  int sign = +1;  // +1 or -1
  int scalar = -1;
  std::vector<int> gens;
};

/// A certified member of I^n: the sum of its terms.  The assembled form
/// concatenates the scaled Pfister entries; a negative sign negates them
/// entrywise (which equals flipping the scalar's sign).
struct InRepresentation {
  std::vector<Term> terms;
};

forms::QForm assemble(const Structure& f, const InRepresentation& rep);
forms::QForm assemble_term(const Structure& f, const Term& term);

enum class GenMode { Exhaustive, Sampled };

inline constexpr long long kDefaultGenBudget = 1'000'000;

/// Streams representations of I^n with `terms` summands.  Exhaustive mode
/// enumerates all (scalar, gens) tuples per term with positive signs --
/// negative signs add no new assembled forms, since -(s * rho) = (-s) * rho
/// entrywise -- and refuses to start when |F*|^((n+1)*terms) exceeds the
/// budget.  Sampled mode draws `count` representations (signs included)
/// from the seeded generator.
void for_each_representation(const Structure& f, int n, int terms, GenMode mode,
                             const std::function<void(const InRepresentation&)>& fn,
                             long long budget = kDefaultGenBudget,
                             uint64_t seed = 0, long long count = 0);

/// Materialized variant for small enumerations.
std::vector<std::pair<forms::QForm, InRepresentation>> gen_in(
    const Structure& f, int n, int terms, GenMode mode,
    long long budget = kDefaultGenBudget, uint64_t seed = 0,
    long long count = 0);

struct HauptsatzViolation {
  InRepresentation rep;
  int dim_w = 0;
};

struct HauptsatzReport {
  long long checked = 0;
  std::vector<HauptsatzViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// For every generated representation with exactly `terms` summands:
/// compute the Witt decomposition of the assembled form and report any
/// instance with 0 < dim_W < 2^n (equivalently: not hyperbolic yet below
/// the bound).  Requires a formally real special hyperfield.
HauptsatzReport check_hauptsatz(const Structure& f, int n, int terms,
                                long long budget = kDefaultGenBudget);

enum class Case { I, II, III };
const char* case_name(Case c);

struct TraceStep {
  std::string stage;
  Case case_tag;
  int dim_w;
};

/// Replay of the descent: at each stage the first (anisotropic) Pfister
/// term's generators are adjoined and quotiented away, the remaining form is
/// pushed through the class maps, and the case is classified.  The recorded
/// dim_W chain is expected to be non-increasing; an observed increase is
/// flagged in `diagnostics` rather than assumed away.
struct ProofTrace {
  std::vector<TraceStep> steps;
  std::vector<std::string> diagnostics;
  bool certified = false;
  int bound = 0;  // 2^n

  bool monotone() const {
    for (size_t i = 1; i < steps.size(); ++i)
      if (steps[i].dim_w > steps[i - 1].dim_w) return false;
    return true;
  }
};

/// Requires all signs positive and an anisotropic first Pfister form (the
/// reductions made at the start of the descent); rejects other inputs with
/// std::invalid_argument.
ProofTrace trace_proof(const Structure& f, const InRepresentation& rep);

}  // namespace hauptsatz
}  // namespace hyperforge
