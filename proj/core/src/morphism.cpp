#include "hyperforge/morphism.hpp"

#include <random>
#include <stdexcept>

#include "hyperforge/axioms.hpp"

namespace hyperforge {

Report check_morphism(const Morphism& f, bool full, uint64_t sample_seed,
                      bool verify_endpoints) {
  Report rep;
  const Structure& A = *f.source;
  const Structure& B = *f.target;
  if (static_cast<int>(f.map.size()) != A.size) {
    rep.fail("map-shape", {}, "map size differs from source carrier");
    return rep;
  }
  for (int a = 0; a < A.size; ++a)
    if (f(a) < 0 || f(a) >= B.size) {
      rep.fail("map-range", {a});
      return rep;
    }
  if (verify_endpoints) {
    if (!check_axioms(A, A.declared).passed())
      rep.fail("source-axioms", {}, std::string(kind_name(A.declared)) + " check failed");
    if (!check_axioms(B, B.declared).passed())
      rep.fail("target-axioms", {}, std::string(kind_name(B.declared)) + " check failed");
    if (!rep.passed()) return rep;
  }

  if (f(A.zero) != B.zero) rep.fail("preserves-zero", {A.zero});
  if (f(A.one) != B.one) rep.fail("preserves-one", {A.one});
  for (int a = 0; a < A.size; ++a)
    if (f(A.neg_of(a)) != B.neg_of(f(a))) {
      rep.fail("preserves-neg", {a});
      break;
    }

  for (int a = 0; a < A.size; ++a)
    for (int b = a; b < A.size; ++b) {
      ElemSet add_img = f.image(A.add(a, b));
      ElemSet mul_img = f.image(A.mul(a, b));
      const ElemSet& add_cell = B.add(f(a), f(b));
      const ElemSet& mul_cell = B.mul(f(a), f(b));
      if (!add_img.is_subset_of(add_cell) && !rep.has("preserves-add"))
        rep.fail("preserves-add", {a, b});
      if (!mul_img.is_subset_of(mul_cell) && !rep.has("preserves-mul"))
        rep.fail("preserves-mul", {a, b});
      if (full) {
        if (add_img != add_cell && !rep.has("full-add-equality"))
          rep.fail("full-add-equality", {a, b});
        if (mul_img != mul_cell && !rep.has("full-mul-equality"))
          rep.fail("full-mul-equality", {a, b});
      }
    }

  if (full && rep.passed()) {
    // n-ary sum preservation on sampled tuples: a full morphism must satisfy
    // f(a1+...+ak) = f(a1)+...+f(ak).
    std::mt19937_64 rng(sample_seed);
    std::uniform_int_distribution<int> pick(0, A.size - 1);
    for (int len = 3; len <= 5; ++len) {
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<int> t(static_cast<size_t>(len));
        std::vector<int> ft(static_cast<size_t>(len));
        for (int i = 0; i < len; ++i) {
          t[static_cast<size_t>(i)] = pick(rng);
          ft[static_cast<size_t>(i)] = f(t[static_cast<size_t>(i)]);
        }
        ElemSet lhs = f.image(fold(A, FoldOp::Sum, t));
        ElemSet rhs = fold(B, FoldOp::Sum, ft);
        if (lhs != rhs) {
          rep.fail("full-nary-sum", t);
          return rep;
        }
      }
    }
  }
  return rep;
}

bool is_identity(const Morphism& f) {
  if (f.source->size != f.target->size) return false;
  for (int a = 0; a < f.source->size; ++a)
    if (f(a) != a) return false;
  return true;
}

}  // namespace hyperforge
