#pragma once

#include <vector>

#include "hyperforge/morphism.hpp"
#include "hyperforge/structure.hpp"

namespace hyperforge {
namespace marshall {

/// Coherence verdict for a multiplicative subset.  The coherence witness
/// search ranges P, Q over singletons of M and over product sets u*v that
/// land inside M; that family contains the witnesses used for multirings
/// (singletons) and for square-closed subsets of superdomains (x*a and x*x).
struct CoherenceReport {
  Report report;
  /// Sufficient condition: the structure is a superdomain, 0 is not in M and
  /// M contains all nonzero squares.  When it holds the quotient is a
  /// hyperfield (singleton products).
  bool squares_condition = false;
};

CoherenceReport is_coherent(const Structure& s, const ElemSet& m);

/// Orbit of a under M: the union of a*s over s in M.  Two elements are
/// sim-equivalent iff their orbits meet (criterion (b) of the equivalence
/// lemma; (a) and (c) are cross-checked in the test suite).
ElemSet orbit(const Structure& s, const ElemSet& m, int a);
bool sim(const Structure& s, const ElemSet& m, int a, int b);

struct MarshallQuotient {
  Structure quotient;
  std::vector<int> cls;  // element index -> class index

  Morphism projection_morphism(const Structure& base) const {
    return Morphism{&base, &quotient, cls};
  }
};

/// A/_m M: carrier is the set of sim-classes (union-find over orbit
/// intersections, representatives are smallest indices), tables by scanning
/// full products of class members (the congruence definition).  Refuses
/// 0 in M with std::invalid_argument.
MarshallQuotient marshall_quotient(const Structure& s, const ElemSet& m);

/// Double bookkeeping: re-derives every quotient cell from the
/// characterization "[c] in [a]+[b] iff cs is contained in aM+bM for some s
/// in M" (and its product analogue) and reports any cell where the two
/// constructions disagree.
Report verify_sum_characterization(const Structure& s, const ElemSet& m,
                                   const MarshallQuotient& q);

/// The unique morphism through the quotient: given f with f(M) = {1},
/// returns fbar with f = fbar o projection.  Verifies well-definedness
/// (all members of a class share one image) exhaustively and throws
/// std::invalid_argument when f(M) != {1}.
Morphism induced_morphism(const Structure& s, const ElemSet& m,
                          const MarshallQuotient& q, const Morphism& f);

/// Nonzero squares of s, the standard coherent subset.
ElemSet nonzero_squares(const Structure& s);
/// Nonzero members of finite sums of squares.
ElemSet nonzero_sums_of_squares(const Structure& s);

}  // namespace marshall
}  // namespace hyperforge
