#pragma once

#include <span>
#include <vector>

#include "hyperforge/structure.hpp"

namespace hyperforge {

enum class FoldOp { Sum, Prod };

/// Left fold of the set-valued operation over a tuple of elements, with the
/// empty-tuple conventions sum() = {0} and prod() = {1}.  By the basic-facts
/// lemma the result does not depend on the entry order.
ElemSet fold(const Structure& s, FoldOp op, std::span<const int> tuple);

/// Fold where each entry is itself a set: sum_of_sets([A,B,...]) is the set
/// of all values of a0+b0+... with a0 in A, b0 in B, ...
ElemSet fold_sets(const Structure& s, FoldOp op, std::span<const ElemSet> tuple);

/// n-fold repeated sum of a set with itself: nX = X + X + ... + X.
ElemSet repeated_sum(const Structure& s, const ElemSet& x, int n);

/// Set power X^n under the set product, X^0 = {1}.
ElemSet set_power(const Structure& s, const ElemSet& x, int n);

/// Exhaustively verifies the axiom suite of `kind` over the finite carrier.
/// Violations carry the lexicographically smallest witness per axiom.
/// Throws std::invalid_argument on an empty carrier.
Report check_axioms(const Structure& s, Kind kind);

/// Smallest n >= 1 with 0 in 1+1+...+1 (n summands); 0 if the partial-sum
/// sets stabilize (or cycle) without ever containing zero.
int characteristic(const Structure& s);

/// Outcome of the strong-inversion-property check on one operation of the
/// structure, restricted to the nonzero part.
struct SipReport {
  bool closed = true;      // nonzero part closed under the operation
  bool sip = false;        // every nonzero a has a unique b with a*b = {1}
  bool single_valued = false;  // all nonzero cells singletons (group case)
  std::vector<Violation> closure_violations;

  /// The checked equivalence: SIP holds iff the operation is single-valued.
  bool fact_agrees() const { return sip == single_valued; }
};

/// Verifies the SIP equivalence on the multiplicative part (default) or on
/// the additive part (op = FoldOp::Sum, with unit 0 and inverse -a).
/// Zero divisors make the nonzero part non-closed; that is reported in the
/// result instead of thrown.
SipReport check_sip(const Structure& s, FoldOp op = FoldOp::Prod);

/// Closure of the set of (set-valued) squares under addition, i.e. the set
/// of all members of finite sums of squares.  Includes zero when some sum
/// contains it.
ElemSet sums_of_squares(const Structure& s);

/// The set of all members of a*a over the carrier.
ElemSet square_set(const Structure& s);

}  // namespace hyperforge
