#include "hyperforge/axioms.hpp"

#include <set>
#include <stdexcept>

namespace hyperforge {

namespace {

std::string detail_sets(const Structure& s, const ElemSet& lhs, const ElemSet& rhs) {
  auto render = [&](const ElemSet& x) {
    std::string out = "{";
    bool first = true;
    x.for_each([&](int i) {
      if (!first) out += ",";
      out += s.label_of(i);
      first = false;
    });
    return out + "}";
  };
  return render(lhs) + " vs " + render(rhs);
}

// Additive commutative multigroup: M1-M4 for (carrier, +, -, 0).
void check_add_multigroup(const Structure& s, Report& rep) {
  const int n = s.size;
  // M2: a + 0 = {a}
  for (int a = 0; a < n; ++a) {
    if (!s.add(a, s.zero).is_singleton(a)) {
      rep.fail("M2-add-identity", {a});
      break;
    }
  }
  // M1: c in a+b implies a in c-b and b in -a+c
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        bool bad = false;
        s.add(a, b).for_each([&](int c) {
          if (bad) return;
          if (!s.add(c, s.neg_of(b)).contains(a) ||
              !s.add(s.neg_of(a), c).contains(b)) {
            rep.fail("M1-add-roundtrip", {a, b, c});
            bad = true;
          }
        });
        if (bad) return;
      }
  }();
  // M4 (cellwise commutativity) is covered by validate_structure.
  // M3: (a+b)+c = a+(b+c) as sets; the stated implication in both scan
  // orders amounts to equality of the two folds.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ElemSet l(n), r(n);
        s.add(a, b).for_each([&](int x) { l |= s.add(x, c); });
        s.add(b, c).for_each([&](int y) { r |= s.add(a, y); });
        if (l != r) {
          rep.fail("M3-add-associative", {a, b, c}, detail_sets(s, l, r));
          return;
        }
      }
}

// Multiplicative commutative multimonoid: M3, M4 and a in 1*a.
void check_mul_multimonoid(const Structure& s, Report& rep) {
  const int n = s.size;
  for (int a = 0; a < n; ++a) {
    if (!s.mul(a, s.one).contains(a)) {
      rep.fail("multimonoid-unit", {a}, "a not in 1*a");
      break;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ElemSet l(n), r(n);
        s.mul(a, b).for_each([&](int x) { l |= s.mul(x, c); });
        s.mul(b, c).for_each([&](int y) { r |= s.mul(a, y); });
        if (l != r) {
          rep.fail("M3-mul-associative", {a, b, c}, detail_sets(s, l, r));
          return;
        }
      }
}

// Multiplicative part is a commutative monoid: single-valued, associative,
// 1*a = a.
void check_mul_monoid(const Structure& s, Report& rep) {
  const int n = s.size;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (s.mul(a, b).count() != 1 && !rep.has("mul-single-valued"))
        rep.fail("mul-single-valued", {a, b});
  if (rep.has("mul-single-valued")) return;
  for (int a = 0; a < n; ++a)
    if (s.mul_elem(a, s.one) != a) {
      rep.fail("monoid-unit", {a});
      break;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.mul_elem(s.mul_elem(a, b), c) != s.mul_elem(a, s.mul_elem(b, c))) {
          rep.fail("monoid-associative", {a, b, c});
          return;
        }
}

void check_absorbing_zero(const Structure& s, Report& rep, bool singleton_form) {
  for (int a = 0; a < s.size; ++a) {
    const ElemSet& c = s.mul(a, s.zero);
    bool ok = singleton_form ? c.is_singleton(s.zero) : c.contains(s.zero) && c.count() == 1;
    if (!ok) {
      rep.fail("absorbing-zero", {a}, "a*0 != {0}");
      return;
    }
  }
}

// Multiring distributivity: c in a+b implies c*d in a*d + b*d.
void check_multiring_distrib(const Structure& s, Report& rep) {
  const int n = s.size;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const ElemSet& rhs = s.add(s.mul_elem(a, d), s.mul_elem(b, d));
        bool bad = false;
        s.add(a, b).for_each([&](int c) {
          if (bad) return;
          if (!rhs.contains(s.mul_elem(c, d))) {
            rep.fail("weak-distributivity", {a, b, d, c});
            bad = true;
          }
        });
        if (bad) return;
      }
}

// Superring weak distributivity: d in c(a+b) implies d in ca+cb;
// with `equality` also the converse (full superring / hyperring).
void check_weak_distrib(const Structure& s, Report& rep, bool equality,
                        const char* axiom) {
  const int n = s.size;
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        ElemSet lhs = s.scale(c, s.add(a, b));
        ElemSet rhs = s.add_sets(s.mul(c, a), s.mul(c, b));
        bool ok = equality ? lhs == rhs : lhs.is_subset_of(rhs);
        if (!ok) {
          rep.fail(axiom, {c, a, b}, detail_sets(s, lhs, rhs));
          return;
        }
      }
}

void check_signs_rule(const Structure& s, Report& rep) {
  const int n = s.size;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      ElemSet m = s.neg_set(s.mul(a, b));
      if (m != s.mul(s.neg_of(a), b) || m != s.mul(a, s.neg_of(b))) {
        rep.fail("rule-of-signs", {a, b});
        return;
      }
    }
}

void check_nontrivial(const Structure& s, Report& rep) {
  if (s.zero == s.one) rep.fail("nontrivial", {}, "0 = 1");
}

void check_no_zero_divisors(const Structure& s, Report& rep) {
  const int n = s.size;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      bool z = s.mul(a, b).contains(s.zero);
      bool expect = (a == s.zero) || (b == s.zero);
      if (z != expect) {
        rep.fail("no-zero-divisors", {a, b},
                 z ? "0 in a*b with a,b nonzero" : "0 not in a*0");
        return;
      }
    }
}

void check_inverses(const Structure& s, Report& rep) {
  for (int a = 0; a < s.size; ++a) {
    if (a == s.zero) continue;
    bool found = false;
    for (int b = 0; b < s.size && !found; ++b)
      if (s.mul(a, b).contains(s.one)) found = true;
    if (!found) {
      rep.fail("inverses", {a}, "no b with 1 in a*b");
      return;
    }
  }
}

void check_add_single_valued(const Structure& s, Report& rep) {
  for (int a = 0; a < s.size; ++a)
    for (int b = a; b < s.size; ++b)
      if (s.add(a, b).count() != 1) {
        rep.fail("add-single-valued", {a, b});
        return;
      }
}

}  // namespace

ElemSet fold(const Structure& s, FoldOp op, std::span<const int> tuple) {
  if (s.size <= 0) throw std::invalid_argument("fold: empty structure");
  ElemSet acc = s.singleton(op == FoldOp::Sum ? s.zero : s.one);
  for (int t : tuple) {
    ElemSet next(s.size);
    acc.for_each([&](int x) { next |= (op == FoldOp::Sum ? s.add(x, t) : s.mul(x, t)); });
    acc = next;
  }
  return acc;
}

ElemSet fold_sets(const Structure& s, FoldOp op, std::span<const ElemSet> tuple) {
  if (s.size <= 0) throw std::invalid_argument("fold_sets: empty structure");
  ElemSet acc = s.singleton(op == FoldOp::Sum ? s.zero : s.one);
  for (const ElemSet& t : tuple) {
    acc = (op == FoldOp::Sum) ? s.add_sets(acc, t) : s.mul_sets(acc, t);
  }
  return acc;
}

ElemSet repeated_sum(const Structure& s, const ElemSet& x, int n) {
  std::vector<ElemSet> copies(static_cast<size_t>(n), x);
  return fold_sets(s, FoldOp::Sum, copies);
}

ElemSet set_power(const Structure& s, const ElemSet& x, int n) {
  std::vector<ElemSet> copies(static_cast<size_t>(n), x);
  return fold_sets(s, FoldOp::Prod, copies);
}

Report check_axioms(const Structure& s, Kind kind) {
  if (s.size <= 0) throw std::invalid_argument("check_axioms: empty carrier");
  Report rep = validate_structure(s);
  if (!rep.passed()) return rep;

  switch (kind) {
    case Kind::Multigroup:
      check_add_multigroup(s, rep);
      break;
    case Kind::Multimonoid:
      check_mul_multimonoid(s, rep);
      break;
    case Kind::Multiring:
      check_add_multigroup(s, rep);
      check_mul_monoid(s, rep);
      if (rep.passed()) {
        check_absorbing_zero(s, rep, true);
        check_multiring_distrib(s, rep);
      }
      break;
    case Kind::Hyperring: {
      Report base = check_axioms(s, Kind::Multiring);
      rep.merge(base);
      if (rep.passed())
        check_weak_distrib(s, rep, /*equality=*/true, "hyperring-distributive-equality");
      break;
    }
    case Kind::Superring:
      check_add_multigroup(s, rep);
      check_mul_multimonoid(s, rep);
      check_absorbing_zero(s, rep, true);
      check_weak_distrib(s, rep, /*equality=*/false, "weak-distributivity");
      check_signs_rule(s, rep);
      break;
    case Kind::Full: {
      Report base = check_axioms(s, Kind::Superring);
      rep.merge(base);
      if (rep.passed())
        check_weak_distrib(s, rep, /*equality=*/true, "full-distributive-equality");
      break;
    }
    case Kind::Superdomain: {
      Report base = check_axioms(s, Kind::Superring);
      rep.merge(base);
      check_nontrivial(s, rep);
      if (rep.passed()) check_no_zero_divisors(s, rep);
      break;
    }
    case Kind::QuasiSuperfield: {
      Report base = check_axioms(s, Kind::Superring);
      rep.merge(base);
      check_nontrivial(s, rep);
      if (rep.passed()) check_inverses(s, rep);
      break;
    }
    case Kind::Superfield: {
      Report base = check_axioms(s, Kind::Superdomain);
      rep.merge(base);
      if (rep.passed()) check_inverses(s, rep);
      break;
    }
    case Kind::Hyperfield: {
      Report base = check_axioms(s, Kind::Multiring);
      rep.merge(base);
      check_nontrivial(s, rep);
      if (rep.passed()) check_inverses(s, rep);
      break;
    }
    case Kind::Ring: {
      check_add_single_valued(s, rep);
      Report base = check_axioms(s, Kind::Multiring);
      rep.merge(base);
      break;
    }
  }
  return rep;
}

int characteristic(const Structure& s) {
  ElemSet acc = s.singleton(s.zero);
  std::set<ElemSet> seen;
  // The partial-sum sequence over a finite powerset is eventually periodic;
  // stop on the first repeated set.  2*size caps the scan defensively.
  for (int n = 1; n <= 2 * s.size + 2; ++n) {
    ElemSet next(s.size);
    acc.for_each([&](int x) { next |= s.add(x, s.one); });
    acc = next;
    if (acc.contains(s.zero)) return n;
    if (!seen.insert(acc).second) return 0;
  }
  return 0;
}

SipReport check_sip(const Structure& s, FoldOp op) {
  SipReport out;
  const int n = s.size;
  const int unit = (op == FoldOp::Prod) ? s.one : s.zero;
  auto cell = [&](int a, int b) -> const ElemSet& {
    return op == FoldOp::Prod ? s.mul(a, b) : s.add(a, b);
  };
  if (unit == s.zero && op == FoldOp::Prod)
    throw std::invalid_argument("check_sip: structure has 0 = 1");

  // Nonzero part must be closed for the group question to make sense.
  out.single_valued = true;
  for (int a = 0; a < n; ++a) {
    if (a == s.zero) continue;
    for (int b = a; b < n; ++b) {
      if (b == s.zero) continue;
      const ElemSet& c = cell(a, b);
      if (c.contains(s.zero)) {
        out.closed = false;
        if (out.closure_violations.empty())
          out.closure_violations.push_back({"nonzero-not-closed", {a, b}, ""});
      }
      if (c.count() != 1) out.single_valued = false;
    }
  }

  // SIP: for every nonzero a there is a unique nonzero b with a*b = {unit}.
  out.sip = true;
  for (int a = 0; a < n && out.sip; ++a) {
    if (a == s.zero) continue;
    int hits = 0;
    for (int b = 0; b < n; ++b) {
      if (b == s.zero) continue;
      if (cell(a, b).is_singleton(unit)) ++hits;
    }
    if (hits != 1) out.sip = false;
  }
  return out;
}

ElemSet square_set(const Structure& s) {
  ElemSet sq(s.size);
  for (int a = 0; a < s.size; ++a) sq |= s.mul(a, a);
  return sq;
}

ElemSet sums_of_squares(const Structure& s) {
  ElemSet sq = square_set(s);
  ElemSet acc = sq;
  for (;;) {
    ElemSet next = acc | s.add_sets(acc, sq);
    if (next == acc) return acc;
    acc = next;
  }
}

}  // namespace hyperforge
