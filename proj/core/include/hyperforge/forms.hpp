#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hyperforge/structure.hpp"

namespace hyperforge {
namespace forms {

/// Quadratic form over a special hyperfield: an ordered tuple of nonzero
/// element indices.  The empty form is allowed as the Witt unit.
using QForm = std::vector<int>;

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultBfsBudget = 10'000'000;

/// D(phi): the fold-sum of the entries minus {0}.  Empty form -> empty set.
ElemSet value_set(const Structure& f, std::span<const int> phi);

/// The special-group iterated value set: D(<a>) = {a},
/// D(<a> + rho) = union over y in D(rho) of (a + y) \ {0}.  Agrees with
/// value_set on every catalog structure tested; kept separate so divergence
/// is observable.
ElemSet value_set_inductive(const Structure& f, std::span<const int> phi);

/// Binary isometry: <a,b> = <c,d> iff ab = cd and ac in D(<1,cd>).
bool binary_isometric(const Structure& f, int a, int b, int c, int d);

/// Isometry: dimension 1 is equality, dimension 2 the binary criterion,
/// dimension >= 3 chain equivalence (BFS over sorted forms, replacing two
/// entries by a binary-isometric pair per move).  Throws BudgetError when
/// the visited-state budget is exceeded and std::invalid_argument on
/// dimension mismatch.
bool isometric(const Structure& f, const QForm& phi, const QForm& psi,
               long long budget = kDefaultBfsBudget);

/// Isotropy via the value-set recursion: <a> + rho is isotropic iff
/// -a in D(rho) or rho is isotropic.  O(dim^2) set operations.
bool is_isotropic(const Structure& f, const QForm& phi);

/// Isotropy by BFS: search the chain-equivalence class for a form containing
/// a pair x, -x.  The semantic primitive; cross-checked against
/// is_isotropic wherever both run.
bool is_isotropic_bfs(const Structure& f, const QForm& phi,
                      long long budget = kDefaultBfsBudget);

/// Isotropy by entry splitting: a partition of the entries into phi1, phi2
/// with some x in D(phi1) and -x in D(phi2).  Exhaustive over 2^dim subsets;
/// intended for small dimensions.
bool is_isotropic_split(const Structure& f, const QForm& phi);

struct WittDecomposition {
  QForm anisotropic;
  int hyperbolic_count = 0;
};

/// Repeatedly detects an isotropy witness, extracts one hyperbolic plane
/// constructively (each step is a chain move) and strips it.  The residue is
/// anisotropic and dim(phi) = dim(residue) + 2 * count.
WittDecomposition witt_decompose(const Structure& f, const QForm& phi);

/// Plane stripping where the hyperbolic pair is found by BFS instead of the
/// recursion; used to cross-validate witt_decompose at small dimensions.
WittDecomposition witt_decompose_bfs(const Structure& f, const QForm& phi,
                                     long long budget = kDefaultBfsBudget);

int dim_w(const Structure& f, const QForm& phi);

/// Witt equivalence: anisotropic parts are isometric.
bool witt_equivalent(const Structure& f, const QForm& phi, const QForm& psi,
                     long long budget = kDefaultBfsBudget);

/// <<g1,...,gn>>: the 2^n-dimensional tensor product of <1, gi>; the entry
/// for subset S (bitmask order) is the product of the gi with i in S.
QForm pfister(const Structure& f, const std::vector<int>& gens);

QForm scale_form(const Structure& f, int s, const QForm& phi);
QForm neg_form(const Structure& f, const QForm& phi);
QForm concat(const QForm& a, const QForm& b);

struct HyperfieldClasses {
  bool pre_special = false;   // a^2 = 1 for nonzero a, and 1 != -1
  bool special = false;       // pre-special + the special-group axiom suite
  bool formally_real = false; // -1 not in finite sums of squares
  bool real_reduced = false;  // pre-special and 1+1 = {1}
  bool rooted = false;        // {a,b} subset of a+b for nonzero a,b
};

/// Classification flags.  The special check verifies, over the binary
/// isometry relation: equivalence-relation laws, commutation <a,b> = <b,a>,
/// <a,-a> = <1,-1>, the discriminant law, transversality, scaling, and
/// transitivity of the one-move relation on 3-dimensional forms.
/// Throws std::invalid_argument when f fails the hyperfield axioms.
HyperfieldClasses classify_hyperfield(const Structure& f);

}  // namespace forms
}  // namespace hyperforge
