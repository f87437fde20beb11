#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperforge/axioms.hpp"
#include "hyperforge/morphism.hpp"
#include "hyperforge/structure.hpp"

namespace hyperforge {
namespace poly {

/// Polynomial over a structure: coefficient element indices, index =
/// exponent, trailing zero coefficients trimmed.  The zero polynomial has an
/// empty list.
struct Poly {
  std::vector<int> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  bool operator==(const Poly&) const = default;
  bool operator<(const Poly& o) const { return c < o.c; }
};

Poly make_poly(const Structure& f, std::vector<int> coeffs);
int coeff(const Structure& f, const Poly& p, int i);
Poly x_minus(const Structure& f, int alpha);  // X - alpha
Poly monomial(const Structure& f, int coeff, int exponent);
Poly neg_poly(const Structure& f, const Poly& p);

/// The set of results of a polynomial sum or product is a coefficientwise
/// box: membership of a polynomial is decided coefficient by coefficient.
struct BoxPoly {
  std::vector<ElemSet> sets;  // index = exponent; beyond the list reads {0}

  int length() const { return static_cast<int>(sets.size()); }
};

BoxPoly box_add(const Structure& f, const Poly& p, const Poly& q);
BoxPoly box_mul(const Structure& f, const Poly& p, const Poly& q);
/// Cellwise box + singleton polynomial.
BoxPoly box_add_poly(const Structure& f, const BoxPoly& b, const Poly& p);
bool box_contains(const Structure& f, const BoxPoly& b, const Poly& p);
/// All members (trimmed).  Throws when the box has more than `limit` members.
std::vector<Poly> box_members(const Structure& f, const BoxPoly& b,
                              long long limit = 1'000'000);

struct DegreeBounds {
  int min_deg;
  int max_deg;
};

/// The degree-lemma bounds: for addition with p != -q,
/// min(deg p, deg q) <= deg t <= max(deg p, deg q); for multiplication over a
/// superdomain, deg t = deg p + deg q exactly.  For the excluded cases
/// (p = -q, or products over a non-superdomain) min_deg is 0, the trivial
/// lower bound.  Throws on zero inputs.
DegreeBounds degree_bounds(const Structure& f, const Poly& p, const Poly& q,
                           FoldOp op, bool superdomain_mul = true);

/// ev(a, f) = { b : b in c0 + c1*a + ... + cn*a^n }.
ElemSet evaluate(const Structure& f, const Poly& p, int a);
/// { a : 0 in ev(a, f) }.
ElemSet roots(const Structure& f, const Poly& p);

/// For hyperfields every root is effective: when alpha is a root, returns a
/// g with deg g = deg f - 1 and f in (X - alpha) * g (first such g in
/// coefficient-lexicographic order); returns nullopt when alpha is not a
/// root.
std::optional<Poly> effective_root_witness(const Structure& f, const Poly& p,
                                           int alpha);

struct EuclidResult {
  Poly q;
  Poly r;
};

/// Euclid division over a superfield: a witness pair with f in q*g + r and
/// (r = 0 or deg r < deg g), verified against the box-membership oracle
/// before returning.  Choices that the set-valued arithmetic leaves open are
/// resolved deterministically: the inverse of the leading coefficient is the
/// smallest-index b with 1 in b_m * b, and intermediate polynomials take the
/// smallest member of each coefficient set.
EuclidResult euclid_divide(const Structure& f, const Poly& num, const Poly& den);

/// True iff no factorization num in g*h with deg g, deg h >= 1 exists
/// (exhaustive over coefficient tuples).  Throws for degree < 1.
bool is_irreducible(const Structure& f, const Poly& num);

/// F[X]/<p> in representative semantics: the carrier is all polynomials of
/// degree <= deg p - 1 (encoded little-endian in base |F|), addition is the
/// coefficientwise box, multiplication is the box product followed by
/// reduction of every member modulo p, collecting all residues r with
/// t in q*p + r.  Throws when p is reducible.
struct QuotientSuperfield {
  Structure s;
  int base_size = 0;
  int rep_degree = 0;  // carrier = polynomials of degree <= rep_degree

  int encode(const Structure& base, const Poly& p) const;
  Poly decode(int index) const;
  /// a -> class of the constant polynomial a (identity on indices).
  Morphism embedding(const Structure& base) const;
  int x_class() const { return base_size > 1 ? base_size : 0; }
};

QuotientSuperfield quotient_superfield(const Structure& f, const Poly& p);

/// Text syntax: "X^2 + a*X - 1".  One term per exponent; '-' is always an
/// operator (structural negation), labels are matched without a leading
/// sign; the variable is X or x.
Poly parse_poly(const Structure& f, const std::string& text);
std::string poly_to_string(const Structure& f, const Poly& p);

}  // namespace poly
}  // namespace hyperforge
