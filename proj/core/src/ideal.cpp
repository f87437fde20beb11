#include "hyperforge/ideal.hpp"

#include <map>
#include <stdexcept>

#include "hyperforge/axioms.hpp"

namespace hyperforge {

Report is_ideal(const Structure& s, const Ideal& i) {
  Report rep;
  if (!i.members.contains(s.zero)) rep.fail("ideal-contains-zero", {s.zero});
  bool done = false;
  i.members.for_each([&](int x) {
    if (done) return;
    i.members.for_each([&](int y) {
      if (done) return;
      if (!s.add(x, y).is_subset_of(i.members)) {
        rep.fail("ideal-add-closed", {x, y});
        done = true;
      }
    });
  });
  done = false;
  for (int a = 0; a < s.size && !done; ++a) {
    i.members.for_each([&](int x) {
      if (done) return;
      if (!s.mul(a, x).is_subset_of(i.members)) {
        rep.fail("ideal-mul-absorbing", {a, x});
        done = true;
      }
    });
  }
  return rep;
}

Ideal ideal_generate(const Structure& s, const ElemSet& gens) {
  ElemSet cur = gens;
  cur.insert(s.zero);
  for (;;) {
    ElemSet next = cur;
    next |= s.add_sets(cur, cur);
    for (int a = 0; a < s.size; ++a) next |= s.mul_sets(s.singleton(a), cur);
    cur.for_each([&](int x) { next.insert(s.neg_of(x)); });
    if (next == cur) return Ideal{cur};
    cur = next;
  }
}

IdealFlags classify_ideal(const Structure& s, const Ideal& i) {
  IdealFlags flags;
  const bool proper = !i.members.contains(s.one);

  auto both_outside_product_inside = [&](bool meet_only) {
    // Searches a,b outside I whose product set is inside I (prime) or merely
    // meets I (strongly prime).  Returns true when such a witness exists.
    for (int a = 0; a < s.size; ++a) {
      if (i.members.contains(a)) continue;
      for (int b = a; b < s.size; ++b) {
        if (i.members.contains(b)) continue;
        const ElemSet& p = s.mul(a, b);
        bool inside = meet_only ? p.intersects(i.members) : p.is_subset_of(i.members);
        if (inside) return true;
      }
    }
    return false;
  };

  flags.prime = proper && !both_outside_product_inside(/*meet_only=*/false);
  flags.strongly_prime = proper && !both_outside_product_inside(/*meet_only=*/true);

  flags.maximal = proper;
  if (proper) {
    for (int x = 0; x < s.size && flags.maximal; ++x) {
      if (i.members.contains(x)) continue;
      ElemSet extended = i.members;
      extended.insert(x);
      Ideal j = ideal_generate(s, extended);
      if (j.members.count() != s.size) flags.maximal = false;
    }
  }

  // Cross-check: I strongly prime iff A/I is a superdomain.
  QuotientByIdeal q = quotient_by_ideal(s, i);
  bool quotient_superdomain = check_axioms(q.quotient, Kind::Superdomain).passed();
  if (flags.strongly_prime != quotient_superdomain)
    throw std::logic_error(
        "classify_ideal: strongly-prime flag disagrees with superdomain check "
        "on the quotient of " + s.name);
  return flags;
}

QuotientByIdeal quotient_by_ideal(const Structure& s, const Ideal& i) {
  Report ok = is_ideal(s, i);
  if (!ok.passed())
    throw std::invalid_argument("quotient_by_ideal: not an ideal of " + s.name);

  // Coset of x is the value set of x + I; classes are distinct coset sets,
  // ordered by their smallest representative.
  std::vector<ElemSet> coset(static_cast<size_t>(s.size), ElemSet(s.size));
  for (int x = 0; x < s.size; ++x) coset[static_cast<size_t>(x)] = s.add_sets(s.singleton(x), i.members);

  std::vector<int> cls(static_cast<size_t>(s.size), -1);
  std::vector<int> reps;
  std::map<ElemSet, int> index_of;
  for (int x = 0; x < s.size; ++x) {
    auto it = index_of.find(coset[static_cast<size_t>(x)]);
    if (it == index_of.end()) {
      int id = static_cast<int>(reps.size());
      index_of.emplace(coset[static_cast<size_t>(x)], id);
      reps.push_back(x);
      cls[static_cast<size_t>(x)] = id;
    } else {
      cls[static_cast<size_t>(x)] = it->second;
    }
  }

  const int m = static_cast<int>(reps.size());
  Structure q = make_blank(s.name + "/I", {}, cls[static_cast<size_t>(s.zero)],
                           cls[static_cast<size_t>(s.one)]);
  q.size = m;
  q.labels.resize(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c)
    q.labels[static_cast<size_t>(c)] = "[" + s.label_of(reps[static_cast<size_t>(c)]) + "]";
  q.neg.resize(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c)
    q.neg[static_cast<size_t>(c)] = cls[static_cast<size_t>(s.neg_of(reps[static_cast<size_t>(c)]))];
  q.add_cells.assign(static_cast<size_t>(m) * m, ElemSet(m));
  q.mul_cells.assign(static_cast<size_t>(m) * m, ElemSet(m));
  q.declared = (m == 1) ? Kind::Superring : s.declared;

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      ElemSet add_out(m), mul_out(m);
      s.add(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]).for_each([&](int z) {
        add_out.insert(cls[static_cast<size_t>(z)]);
      });
      s.mul(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]).for_each([&](int z) {
        mul_out.insert(cls[static_cast<size_t>(z)]);
      });
      q.add_cells[static_cast<size_t>(a) * m + b] = add_out;
      q.mul_cells[static_cast<size_t>(a) * m + b] = mul_out;
    }

  return QuotientByIdeal{std::move(q), std::move(cls)};
}

Ideal separating_prime(const Structure& s, const Ideal& i, const ElemSet& m) {
  if (!m.contains(s.one))
    throw std::invalid_argument("separating_prime: M is not multiplicative (1 not in M)");
  bool closed = true;
  m.for_each([&](int a) {
    m.for_each([&](int b) {
      if (!s.mul(a, b).is_subset_of(m)) closed = false;
    });
  });
  if (!closed)
    throw std::invalid_argument("separating_prime: M is not multiplicatively closed");
  Ideal p = ideal_generate(s, i.members);
  if (p.members.intersects(m))
    throw std::invalid_argument("separating_prime: <I> meets M");

  // Greedy maximal extension in index order; a maximal ideal among those
  // disjoint from M is prime (prime ideal theorem, finite case).
  for (int x = 0; x < s.size; ++x) {
    if (p.members.contains(x)) continue;
    ElemSet ext = p.members;
    ext.insert(x);
    Ideal j = ideal_generate(s, ext);
    if (!j.members.intersects(m)) p = j;
  }

  IdealFlags flags = classify_ideal(s, p);
  if (!flags.prime)
    throw std::logic_error("separating_prime: maximal extension is not prime");
  return p;
}

std::vector<Ideal> enumerate_ideals(const Structure& s) {
  if (s.size > 20)
    throw std::invalid_argument("enumerate_ideals: carrier too large for subset scan");
  std::vector<Ideal> out;
  const uint64_t limit = uint64_t{1} << s.size;
  for (uint64_t mask = 0; mask < limit; ++mask) {
    if (!(mask >> s.zero & 1)) continue;
    ElemSet cand(s.size);
    for (int i = 0; i < s.size; ++i)
      if (mask >> i & 1) cand.insert(i);
    if (is_ideal(s, Ideal{cand}).passed()) out.push_back(Ideal{cand});
  }
  return out;
}

}  // namespace hyperforge
