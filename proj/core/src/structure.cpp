#include "hyperforge/structure.hpp"

#include <set>

namespace hyperforge {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Multigroup: return "multigroup";
    case Kind::Multimonoid: return "multimonoid";
    case Kind::Multiring: return "multiring";
    case Kind::Hyperring: return "hyperring";
    case Kind::Superring: return "superring";
    case Kind::Superdomain: return "superdomain";
    case Kind::QuasiSuperfield: return "quasi-superfield";
    case Kind::Superfield: return "superfield";
    case Kind::Hyperfield: return "hyperfield";
    case Kind::Full: return "full";
    case Kind::Ring: return "ring";
  }
  return "?";
}

std::optional<Kind> parse_kind(const std::string& name) {
  for (Kind k : {Kind::Multigroup, Kind::Multimonoid, Kind::Multiring,
                 Kind::Hyperring, Kind::Superring, Kind::Superdomain,
                 Kind::QuasiSuperfield, Kind::Superfield, Kind::Hyperfield,
                 Kind::Full, Kind::Ring}) {
    if (name == kind_name(k)) return k;
  }
  if (name == "multigroup-only") return Kind::Multigroup;
  return std::nullopt;
}

int Structure::mul_elem(int a, int b) const {
  const ElemSet& c = mul(a, b);
  if (c.count() != 1)
    throw std::logic_error("mul_elem on a non-singleton cell of " + name);
  return c.smallest();
}

ElemSet Structure::add_sets(const ElemSet& x, const ElemSet& y) const {
  ElemSet out(size);
  x.for_each([&](int a) { y.for_each([&](int b) { out |= add(a, b); }); });
  return out;
}

ElemSet Structure::mul_sets(const ElemSet& x, const ElemSet& y) const {
  ElemSet out(size);
  x.for_each([&](int a) { y.for_each([&](int b) { out |= mul(a, b); }); });
  return out;
}

ElemSet Structure::scale(int a, const ElemSet& x) const {
  ElemSet out(size);
  x.for_each([&](int b) { out |= mul(a, b); });
  return out;
}

ElemSet Structure::neg_set(const ElemSet& x) const {
  ElemSet out(size);
  x.for_each([&](int a) { out.insert(neg_of(a)); });
  return out;
}

bool Structure::single_valued_mul() const {
  for (const ElemSet& c : mul_cells)
    if (c.count() != 1) return false;
  return true;
}

bool Structure::single_valued_add() const {
  for (const ElemSet& c : add_cells)
    if (c.count() != 1) return false;
  return true;
}

ElemSet Structure::nonzero_set() const {
  ElemSet s = ElemSet::full(size);
  s.erase(zero);
  return s;
}

int Structure::index_of(const std::string& label) const {
  for (int i = 0; i < size; ++i)
    if (labels[static_cast<size_t>(i)] == label) return i;
  return -1;
}

Report validate_structure(const Structure& s) {
  Report rep;
  if (s.size <= 0) {
    rep.fail("carrier-nonempty", {}, "carrier is empty");
    return rep;
  }
  if (s.zero < 0 || s.zero >= s.size || s.one < 0 || s.one >= s.size) {
    rep.fail("distinguished-elements", {}, "zero/one index out of range");
    return rep;
  }
  std::set<std::string> seen;
  for (const auto& l : s.labels)
    if (!seen.insert(l).second && !rep.has("labels-unique"))
      rep.fail("labels-unique", {}, "duplicate label '" + l + "'");
  if (static_cast<int>(s.labels.size()) != s.size ||
      static_cast<int>(s.neg.size()) != s.size ||
      s.add_cells.size() != static_cast<size_t>(s.size) * s.size ||
      s.mul_cells.size() != static_cast<size_t>(s.size) * s.size) {
    rep.fail("table-shape", {}, "field sizes inconsistent with carrier size");
    return rep;
  }
  for (int a = 0; a < s.size && !rep.has("neg-involution"); ++a) {
    int na = s.neg_of(a);
    if (na < 0 || na >= s.size || s.neg_of(na) != a)
      rep.fail("neg-involution", {a});
  }
  if (s.neg_of(s.zero) != s.zero) rep.fail("neg-zero", {s.zero}, "-0 != 0");
  for (int a = 0; a < s.size; ++a) {
    for (int b = 0; b < s.size; ++b) {
      if (s.add(a, b).empty() && !rep.has("add-total")) rep.fail("add-total", {a, b});
      if (s.mul(a, b).empty() && !rep.has("mul-total")) rep.fail("mul-total", {a, b});
      if (b < a) continue;
      if (s.add(a, b) != s.add(b, a) && !rep.has("add-commutative"))
        rep.fail("add-commutative", {a, b});
      if (s.mul(a, b) != s.mul(b, a) && !rep.has("mul-commutative"))
        rep.fail("mul-commutative", {a, b});
    }
  }
  return rep;
}

Structure make_blank(const std::string& name, std::vector<std::string> labels,
                     int zero, int one) {
  Structure s;
  s.name = name;
  s.size = static_cast<int>(labels.size());
  s.labels = std::move(labels);
  s.zero = zero;
  s.one = one;
  s.neg.assign(static_cast<size_t>(s.size), 0);
  for (int i = 0; i < s.size; ++i) s.neg[static_cast<size_t>(i)] = i;
  s.add_cells.assign(static_cast<size_t>(s.size) * s.size, ElemSet(s.size));
  s.mul_cells.assign(static_cast<size_t>(s.size) * s.size, ElemSet(s.size));
  return s;
}

}  // namespace hyperforge
