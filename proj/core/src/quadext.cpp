#include "hyperforge/quadext.hpp"

#include <stdexcept>

#include "hyperforge/axioms.hpp"
#include "hyperforge/catalog.hpp"
#include "hyperforge/forms.hpp"
#include "hyperforge/marshall.hpp"

namespace hyperforge {
namespace quadext {

namespace {

std::string pair_label(const Structure& f, int a, int b) {
  const std::string& la = f.label_of(a);
  const std::string& lb = f.label_of(b);
  if (b == f.zero) return la;
  std::string wterm = (b == f.one) ? "w" : lb + "*w";
  if (a == f.zero) return wterm;
  return la + "+" + wterm;
}

ElemSet one_plus_alpha_nonzero(const Structure& f, int alpha) {
  ElemSet s = f.add(f.one, alpha);
  s.erase(f.zero);
  return s;
}

}  // namespace

Morphism Extension::embedding() const {
  std::vector<int> map(static_cast<size_t>(base->size));
  for (int a = 0; a < base->size; ++a) map[static_cast<size_t>(a)] = pair_index(a, base->zero);
  return Morphism{base.get(), &carrier, std::move(map)};
}

Extension extend(const Structure& f, int alpha) {
  if (alpha == f.zero || alpha == f.one)
    throw std::invalid_argument("extend: alpha must lie outside {0, 1}");
  forms::HyperfieldClasses cls = forms::classify_hyperfield(f);
  if (!cls.special)
    throw std::invalid_argument("extend: base " + f.name +
                                " is not a special hyperfield");

  Extension e;
  e.base = std::make_shared<Structure>(f);
  e.alpha = alpha;
  const Structure& b = *e.base;
  const int n = b.size;
  const int sz = n * n;

  Structure& c = e.carrier;
  c.name = f.name + "(w)";
  c.size = sz;
  c.declared = Kind::Superfield;
  c.labels.resize(static_cast<size_t>(sz));
  c.neg.resize(static_cast<size_t>(sz));
  for (int idx = 0; idx < sz; ++idx) {
    auto [x, y] = e.pair_of(idx);
    c.labels[static_cast<size_t>(idx)] = pair_label(b, x, y);
    c.neg[static_cast<size_t>(idx)] = e.pair_index(b.neg_of(x), b.neg_of(y));
  }
  c.zero = e.pair_index(b.zero, b.zero);
  c.one = e.pair_index(b.one, b.zero);
  c.add_cells.assign(static_cast<size_t>(sz) * sz, ElemSet(sz));
  c.mul_cells.assign(static_cast<size_t>(sz) * sz, ElemSet(sz));

  for (int i = 0; i < sz; ++i) {
    auto [a1, b1] = e.pair_of(i);
    for (int j = i; j < sz; ++j) {
      auto [a2, b2] = e.pair_of(j);

      ElemSet add_cell(sz);
      b.add(a1, a2).for_each([&](int u) {
        b.add(b1, b2).for_each([&](int v) { add_cell.insert(e.pair_index(u, v)); });
      });
      c.add_cells[static_cast<size_t>(i) * sz + j] = add_cell;
      c.add_cells[static_cast<size_t>(j) * sz + i] = add_cell;

      // (a1 + b1 w)(a2 + b2 w): u in a1a2 + alpha b1b2, v in a1b2 + b1a2.
      ElemSet mul_cell(sz);
      int p = b.mul_elem(a1, a2);
      int q = b.mul_elem(alpha, b.mul_elem(b1, b2));
      int r = b.mul_elem(a1, b2);
      int t = b.mul_elem(b1, a2);
      b.add(p, q).for_each([&](int u) {
        b.add(r, t).for_each([&](int v) { mul_cell.insert(e.pair_index(u, v)); });
      });
      c.mul_cells[static_cast<size_t>(i) * sz + j] = mul_cell;
      c.mul_cells[static_cast<size_t>(j) * sz + i] = mul_cell;
    }
  }
  return e;
}

SquareSets square_sets(const Extension& e) {
  const Structure& b = *e.base;
  const Structure& c = e.carrier;

  SquareSets out;
  out.one_plus_alpha = b.add(b.one, e.alpha);
  out.two_f = ElemSet(b.size);
  for (int x = 0; x < b.size; ++x) out.two_f |= b.add(x, x);

  ElemSet squares_enum = square_set(c);
  squares_enum.erase(c.zero);
  ElemSet sums_enum = sums_of_squares(c);
  sums_enum.erase(c.zero);

  ElemSet squares_closed(c.size);
  out.one_plus_alpha.for_each([&](int x) {
    out.two_f.for_each([&](int y) { squares_closed.insert(e.pair_index(x, y)); });
  });
  squares_closed.erase(c.zero);

  ElemSet sums_closed(c.size);
  out.one_plus_alpha.for_each([&](int x) {
    for (int y = 0; y < b.size; ++y) sums_closed.insert(e.pair_index(x, y));
  });
  sums_closed.erase(c.zero);

  if (squares_enum != squares_closed)
    throw std::logic_error("square_sets: enumerated squares differ from "
                           "(1+alpha) + (2)F*w over " + b.name);
  if (sums_enum != sums_closed)
    throw std::logic_error("square_sets: enumerated sums of squares differ "
                           "from (1+alpha) + F*w over " + b.name);
  out.squares = squares_enum;
  out.sum_squares = sums_enum;
  return out;
}

SQuotient s_quotient(const Extension& e, bool reduced) {
  SquareSets sq = square_sets(e);
  const ElemSet& m = reduced ? sq.sum_squares : sq.squares;
  marshall::MarshallQuotient q = marshall::marshall_quotient(e.carrier, m);
  SQuotient out;
  out.s = std::move(q.quotient);
  out.s.name = (reduced ? "Sred(" : "S(") + e.base->name + "," +
               e.base->label_of(e.alpha) + ")";
  out.s.declared = Kind::Hyperfield;
  out.cls = std::move(q.cls);
  out.formally_real_warning =
      sq.sum_squares.contains(e.carrier.neg_of(e.carrier.one));
  return out;
}

bool class_eq_direct(const Extension& e, int a, int b) {
  const Structure& f = *e.base;
  if (a == f.zero || b == f.zero)
    throw std::invalid_argument("class_eq_direct: nonzero elements required");
  ElemSet s1 = one_plus_alpha_nonzero(f, e.alpha);
  bool found = false;
  s1.for_each([&](int s) {
    if (found) return;
    s1.for_each([&](int t) {
      if (!found && f.mul_elem(a, s) == f.mul_elem(b, t)) found = true;
    });
  });
  return found;
}

bool ext_binary_isometric(const Extension& e, const SQuotient& sq, int a, int b,
                          int c, int d) {
  const Structure& f = *e.base;
  for (int x : {a, b, c, d})
    if (x == f.zero)
      throw std::invalid_argument("ext_binary_isometric: nonzero entries required");
  ElemSet s1 = one_plus_alpha_nonzero(f, e.alpha);
  std::vector<int> units = s1.members();

  auto exists_rst = [&](auto&& pred) {
    for (int r : units)
      for (int s : units)
        for (int t : units)
          if (pred(r, s, t)) return true;
    return false;
  };
  auto iso2 = [&](int p, int q, int u, int v) {
    return forms::binary_isometric(f, p, q, u, v);
  };

  bool v2 = exists_rst([&](int r, int s, int t) {  // <ar,bs> = <ct,d>
    return iso2(f.mul_elem(a, r), f.mul_elem(b, s), f.mul_elem(c, t), d);
  });
  bool v3 = exists_rst([&](int r, int s, int t) {  // <ar,bs> = <c,dt>
    return iso2(f.mul_elem(a, r), f.mul_elem(b, s), c, f.mul_elem(d, t));
  });
  bool v4 = exists_rst([&](int r, int s, int t) {  // <a,br> = <cs,dt>
    return iso2(a, f.mul_elem(b, r), f.mul_elem(c, s), f.mul_elem(d, t));
  });
  bool v5 = exists_rst([&](int r, int s, int t) {  // <ar,b> = <cs,dt>
    return iso2(f.mul_elem(a, r), b, f.mul_elem(c, s), f.mul_elem(d, t));
  });
  bool v1 = forms::binary_isometric(
      sq.s, sq.cls[static_cast<size_t>(a)], sq.cls[static_cast<size_t>(b)],
      sq.cls[static_cast<size_t>(c)], sq.cls[static_cast<size_t>(d)]);

  if (v1 != v3 || v2 != v3 || v4 != v3 || v5 != v3)
    throw std::logic_error(
        "ext_binary_isometric: the equivalent criteria disagree over " + f.name);
  return v3;
}

bool ext_binary_isometric(const Extension& e, int a, int b, int c, int d) {
  SQuotient sq = s_quotient(e, false);
  return ext_binary_isometric(e, sq, a, b, c, d);
}

Tower iterate_tower(const Structure& f, const std::vector<int>& alphas) {
  Tower t;
  t.base = std::make_shared<Structure>(f);
  t.alphas = alphas;

  std::shared_ptr<const Structure> cur = t.base;
  std::vector<int> base_map(static_cast<size_t>(f.size));
  for (int i = 0; i < f.size; ++i) base_map[static_cast<size_t>(i)] = i;

  for (size_t k = 0; k < alphas.size(); ++k) {
    int scalar = base_map[static_cast<size_t>(alphas[k])];
    if (scalar == cur->zero || scalar == cur->one)
      throw DegenerateScalar(
          static_cast<int>(k) + 1,
          "iterate_tower: scalar " + f.label_of(alphas[k]) + " degenerates to [" +
              cur->label_of(scalar) + "] at stage " + std::to_string(k + 1));
    Extension e = extend(*cur, scalar);
    SQuotient sq = s_quotient(e, false);

    TowerStage stage;
    Structure named = std::move(sq.s);
    named.name = cur->name + "[" + f.label_of(alphas[k]) + "]";
    stage.hyperfield = std::make_shared<const Structure>(std::move(named));
    stage.alpha_in_prev = scalar;
    // Previous-stage elements embed as pairs (x, 0) = index x.
    stage.map_from_prev.resize(static_cast<size_t>(cur->size));
    for (int x = 0; x < cur->size; ++x)
      stage.map_from_prev[static_cast<size_t>(x)] = sq.cls[static_cast<size_t>(x)];
    stage.map_from_base.resize(static_cast<size_t>(f.size));
    for (int x = 0; x < f.size; ++x)
      stage.map_from_base[static_cast<size_t>(x)] =
          stage.map_from_prev[static_cast<size_t>(base_map[static_cast<size_t>(x)])];

    base_map = stage.map_from_base;
    cur = stage.hyperfield;
    t.stages.push_back(std::move(stage));
  }
  return t;
}

std::pair<bool, bool> tower_class_eq_routes(const Tower& t, int a, int b) {
  const Structure& f = *t.base;
  if (a == f.zero || b == f.zero)
    throw std::invalid_argument("tower_class_eq: nonzero elements required");
  bool oracle = t.push_to_final(a) == t.push_to_final(b);
  bool criterion;
  if (t.alphas.empty()) {
    criterion = a == b;
  } else {
    forms::QForm pf = forms::pfister(f, t.alphas);
    criterion = forms::value_set(f, pf).contains(f.mul_elem(a, b));
  }
  return {criterion, oracle};
}

bool tower_class_eq(const Tower& t, int a, int b) {
  auto [criterion, oracle] = tower_class_eq_routes(t, a, b);
  if (criterion != oracle)
    throw std::logic_error("tower_class_eq: Pfister criterion disagrees with "
                           "the composed class maps over " + t.base->name);
  return criterion;
}

bool tower_formally_real(const Tower& t) {
  const Structure& f = *t.base;
  bool final_real = forms::classify_hyperfield(t.final_stage()).formally_real;
  if (t.alphas.empty()) return final_real;
  forms::QForm pf = forms::pfister(f, t.alphas);
  bool criterion = !forms::value_set(f, pf).contains(f.neg_of(f.one));
  if (criterion != final_real)
    throw std::logic_error(
        "tower_formally_real: Pfister criterion disagrees with the final "
        "stage classification over " + f.name);
  return criterion;
}

SwapIso tower_swap_iso(const Structure& f, int alpha, int beta) {
  SwapIso out;
  out.first = iterate_tower(f, {alpha, beta});
  out.second = iterate_tower(f, {beta, alpha});
  auto iso = catalog::find_isomorphism(out.first.final_stage(),
                                       out.second.final_stage());
  if (!iso)
    throw std::logic_error(
        "tower_swap_iso: no isomorphism between the two extension orders of " +
        f.name + "; this contradicts the commutation theorem");
  out.iso = std::move(*iso);
  return out;
}

}  // namespace quadext
}  // namespace hyperforge
