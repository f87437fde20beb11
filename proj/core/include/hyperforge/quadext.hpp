#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperforge/morphism.hpp"
#include "hyperforge/structure.hpp"

namespace hyperforge {
namespace quadext {

/// F(w) with w^2 = alpha, built directly as formal pairs a + b*w.
/// Pair (a, b) has carrier index a + b*|F|, so the base embeds as an
/// identity on indices.  Addition is the coefficientwise box; multiplication
/// is (a,b)(c,d) = { (u,v) : u in ac + alpha*b*d, v in ad + bc }.
struct Extension {
  std::shared_ptr<const Structure> base;
  int alpha = -1;
  Structure carrier;

  int pair_index(int a, int b) const { return a + b * base->size; }
  std::pair<int, int> pair_of(int idx) const {
    return {idx % base->size, idx / base->size};
  }
  int omega() const { return pair_index(base->zero, base->one); }

  Morphism embedding() const;
};

/// Requires a special hyperfield base and alpha outside {0, 1} (X^2 - alpha
/// then has no roots, since nonzero squares are 1).  Throws
/// std::invalid_argument otherwise.
Extension extend(const Structure& f, int alpha);

/// The square sets of an extension, each computed by two independent routes
/// that must coincide (enumeration vs the closed forms
/// squares = (1+alpha) + (2)F*w and sums = (1+alpha) + F*w, compared on
/// nonzero members).  Throws std::logic_error when the routes disagree.
struct SquareSets {
  ElemSet squares;        // nonzero squares of the carrier
  ElemSet sum_squares;    // nonzero members of finite sums of squares
  ElemSet one_plus_alpha; // the base cell 1 + alpha, as stored (0 included when present)
  ElemSet two_f;          // union of x + x over the base
};

SquareSets square_sets(const Extension& e);

struct SQuotient {
  Structure s;
  std::vector<int> cls;  // carrier index -> class index
  bool formally_real_warning = false;  // -1 is a sum of squares upstream

  Morphism projection(const Structure& carrier) const {
    return Morphism{&carrier, &s, cls};
  }
};

/// S_F(w) (or its reduced variant): the Marshall quotient of the carrier by
/// nonzero squares (or nonzero sums of squares).  When -1 is a sum of
/// squares the quotient is still built and the warning flag is set.
SQuotient s_quotient(const Extension& e, bool reduced);

/// [a] = [b] in S_F(w) iff a*s = b*t for some s, t in (1+alpha) \ {0}.
bool class_eq_direct(const Extension& e, int a, int b);

/// The equivalent forms of binary isometry over S_F(w): decides
/// <[a],[b]> = <[c],[d]> via r,s,t in (1+alpha) \ {0} with
/// <ar,bs> =_F <c,dt>, checks all five stated variants and the quotient
/// oracle, and throws std::logic_error if any of them disagree.
bool ext_binary_isometric(const Extension& e, int a, int b, int c, int d);
bool ext_binary_isometric(const Extension& e, const SQuotient& sq, int a, int b,
                          int c, int d);

struct DegenerateScalar : std::invalid_argument {
  int stage;
  DegenerateScalar(int stage_index, const std::string& what)
      : std::invalid_argument(what), stage(stage_index) {}
};

struct TowerStage {
  std::shared_ptr<const Structure> hyperfield;
  std::vector<int> map_from_prev;  // previous stage -> this stage
  std::vector<int> map_from_base;  // base -> this stage
  int alpha_in_prev = -1;          // the scalar used, as an element of the previous stage
};

struct Tower {
  std::shared_ptr<const Structure> base;
  std::vector<int> alphas;
  std::vector<TowerStage> stages;

  const Structure& final_stage() const {
    return stages.empty() ? *base : *stages.back().hyperfield;
  }
  int push_to_final(int base_elt) const {
    return stages.empty() ? base_elt
                          : stages.back().map_from_base[static_cast<size_t>(base_elt)];
  }
};

/// Iterates a -> S_F(sqrt a) left to right; each stage's scalar is the class
/// image of the next alpha.  A scalar collapsing to [0] or [1] at its stage
/// raises DegenerateScalar naming the stage.
Tower iterate_tower(const Structure& f, const std::vector<int>& alphas);

/// [a] = [b] at the tower top iff ab is a value of the Pfister form
/// <<alphas>> over the base.  Both the closed form and the composed class
/// maps are evaluated; a mismatch throws std::logic_error.
bool tower_class_eq(const Tower& t, int a, int b);
/// Both routes separately, for diagnostics.
std::pair<bool, bool> tower_class_eq_routes(const Tower& t, int a, int b);

/// Formal reality of the tower top iff -1 is not a value of <<alphas>>
/// over the base; cross-checked against the classification of the final
/// stage.  The empty tower reports the base classification.
bool tower_formally_real(const Tower& t);

struct SwapIso {
  Tower first;   // tower over [alpha, beta]
  Tower second;  // tower over [beta, alpha]
  std::vector<int> iso;  // final(first) -> final(second)
};

/// The two extension orders give isomorphic final hyperfields; failure to
/// exhibit an isomorphism is an internal error (std::logic_error).
SwapIso tower_swap_iso(const Structure& f, int alpha, int beta);

}  // namespace quadext
}  // namespace hyperforge
