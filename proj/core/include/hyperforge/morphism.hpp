#pragma once

#include <cstdint>
#include <vector>

#include "hyperforge/structure.hpp"

namespace hyperforge {

/// A map between two structures, by element index.  Non-owning: the caller
/// keeps source and target alive for the lifetime of the morphism.
struct Morphism {
  const Structure* source = nullptr;
  const Structure* target = nullptr;
  std::vector<int> map;

  int operator()(int a) const { return map[static_cast<size_t>(a)]; }

  ElemSet image(const ElemSet& x) const {
    ElemSet out(target->size);
    x.for_each([&](int a) { out.insert(map[static_cast<size_t>(a)]); });
    return out;
  }
};

/// Verifies the morphism conditions: f(0)=0, f(1)=1, f(-a)=-f(a),
/// c in a+b => f(c) in f(a)+f(b), and c in a*b => f(c) in f(a)*f(b).
/// With `full`, the setwise image equalities f(a+b) = f(a)+f(b) and
/// f(a*b) = f(a)*f(b) are checked for all pairs, and n-ary sum preservation
/// is spot-checked on deterministically sampled tuples (seeded).
///
/// With `verify_endpoints` the declared axiom suites of source and target are
/// re-run first and any failure is reported.
Report check_morphism(const Morphism& f, bool full, uint64_t sample_seed = 0,
                      bool verify_endpoints = false);

bool is_identity(const Morphism& f);

}  // namespace hyperforge
