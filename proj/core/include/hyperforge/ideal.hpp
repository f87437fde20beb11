#pragma once

#include <optional>
#include <vector>

#include "hyperforge/morphism.hpp"
#include "hyperforge/structure.hpp"

namespace hyperforge {

struct Ideal {
  ElemSet members;
};

/// 0 in I, I+I subset of I, A*I subset of I.
Report is_ideal(const Structure& s, const Ideal& i);

/// Least fixed point of closure under addition, negation and multiplication
/// by arbitrary elements; always contains zero.
Ideal ideal_generate(const Structure& s, const ElemSet& gens);

struct IdealFlags {
  bool prime = false;           // 1 not in I and ab subset of I => a in I or b in I
  bool strongly_prime = false;  // 1 not in I and ab meets I => a in I or b in I
  bool maximal = false;
};

/// Decides each flag by the exhaustive defining condition and cross-checks
/// strongly_prime against the superdomain check on the quotient (a mismatch
/// is an internal error and throws).
IdealFlags classify_ideal(const Structure& s, const Ideal& i);

struct QuotientByIdeal {
  Structure quotient;
  std::vector<int> projection;  // element index -> class index

  Morphism projection_morphism(const Structure& base) const {
    return Morphism{&base, &quotient, projection};
  }
};

/// A/I with cosets x+I compared as sets (computed once), operations by the
/// congruence rules on canonical (smallest-index) representatives.
QuotientByIdeal quotient_by_ideal(const Structure& s, const Ideal& i);

/// Finite prime ideal theorem: for a multiplicative set M disjoint from I,
/// returns a prime ideal containing I and disjoint from M, found by greedy
/// maximal extension in index order.  Throws on violated preconditions.
Ideal separating_prime(const Structure& s, const Ideal& i, const ElemSet& m);

/// All ideals of a small structure (exhaustive over subsets; intended for
/// carriers of size <= ~16).
std::vector<Ideal> enumerate_ideals(const Structure& s);

}  // namespace hyperforge
