#include "hyperforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hyperforge/axioms.hpp"

namespace hyperforge {
namespace poly {

Poly make_poly(const Structure& f, std::vector<int> coeffs) {
  while (!coeffs.empty() && coeffs.back() == f.zero) coeffs.pop_back();
  return Poly{std::move(coeffs)};
}

int coeff(const Structure& f, const Poly& p, int i) {
  if (i < 0 || i >= static_cast<int>(p.c.size())) return f.zero;
  return p.c[static_cast<size_t>(i)];
}

Poly x_minus(const Structure& f, int alpha) {
  return make_poly(f, {f.neg_of(alpha), f.one});
}

Poly monomial(const Structure& f, int coefficient, int exponent) {
  std::vector<int> c(static_cast<size_t>(exponent) + 1, f.zero);
  c.back() = coefficient;
  return make_poly(f, std::move(c));
}

Poly neg_poly(const Structure& f, const Poly& p) {
  std::vector<int> c = p.c;
  for (int& x : c) x = f.neg_of(x);
  return Poly{std::move(c)};
}

namespace {

ElemSet box_cell(const Structure& f, const BoxPoly& b, int i) {
  if (i < b.length()) return b.sets[static_cast<size_t>(i)];
  return f.singleton(f.zero);
}

BoxPoly box_neg(const Structure& f, const BoxPoly& b) {
  BoxPoly out;
  for (const ElemSet& s : b.sets) out.sets.push_back(f.neg_set(s));
  return out;
}

// Cellwise sum of two boxes; the union over member pairs of a box sum is
// again a box, cell by cell.
BoxPoly box_add_boxes(const Structure& f, const BoxPoly& a, const BoxPoly& b) {
  BoxPoly out;
  int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i)
    out.sets.push_back(f.add_sets(box_cell(f, a, i), box_cell(f, b, i)));
  return out;
}

BoxPoly box_of_poly(const Structure& f, const Poly& p) {
  BoxPoly out;
  for (int x : p.c) out.sets.push_back(f.singleton(x));
  return out;
}

// The box of (c * X^shift) * g: coefficient i+shift gets c*g_i.
BoxPoly box_scale_shift(const Structure& f, const Poly& g, int c, int shift) {
  BoxPoly out;
  out.sets.assign(static_cast<size_t>(shift), f.singleton(f.zero));
  for (int gi : g.c) out.sets.push_back(f.mul(c, gi));
  return out;
}

/// Enumerates coefficient tuples of fixed length; position 0 varies fastest,
/// so tuples appear in lexicographic order.  fn returning true stops the scan.
template <class Fn>
bool enumerate_tuples(int base, int length, Fn&& fn) {
  std::vector<int> cur(static_cast<size_t>(length), 0);
  for (;;) {
    if (fn(cur)) return true;
    int k = 0;
    while (k < length && ++cur[static_cast<size_t>(k)] == base) {
      cur[static_cast<size_t>(k)] = 0;
      ++k;
    }
    if (k == length) return false;
  }
}

std::string label_for_rep(const Structure& f, const Poly& p) {
  if (p.is_zero()) return f.label_of(f.zero);
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    int ci = p.c[static_cast<size_t>(i)];
    if (ci == f.zero) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += f.label_of(ci);
    } else {
      if (ci != f.one) out += f.label_of(ci) + "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace

BoxPoly box_add(const Structure& f, const Poly& p, const Poly& q) {
  BoxPoly out;
  int len = static_cast<int>(std::max(p.c.size(), q.c.size()));
  out.sets.reserve(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i)
    out.sets.push_back(f.add(coeff(f, p, i), coeff(f, q, i)));
  return out;
}

BoxPoly box_mul(const Structure& f, const Poly& p, const Poly& q) {
  BoxPoly out;
  if (p.is_zero() || q.is_zero()) return out;  // the zero-polynomial box
  int len = p.degree() + q.degree() + 1;
  out.sets.reserve(static_cast<size_t>(len));
  for (int n = 0; n < len; ++n) {
    std::vector<ElemSet> terms;
    int lo = std::max(0, n - q.degree());
    int hi = std::min(p.degree(), n);
    for (int i = lo; i <= hi; ++i)
      terms.push_back(f.mul(p.c[static_cast<size_t>(i)], q.c[static_cast<size_t>(n - i)]));
    out.sets.push_back(fold_sets(f, FoldOp::Sum, terms));
  }
  return out;
}

BoxPoly box_add_poly(const Structure& f, const BoxPoly& b, const Poly& p) {
  return box_add_boxes(f, b, box_of_poly(f, p));
}

bool box_contains(const Structure& f, const BoxPoly& b, const Poly& p) {
  int len = std::max(b.length(), static_cast<int>(p.c.size()));
  for (int i = 0; i < len; ++i) {
    int pi = coeff(f, p, i);
    if (i < b.length()) {
      if (!b.sets[static_cast<size_t>(i)].contains(pi)) return false;
    } else if (pi != f.zero) {
      return false;
    }
  }
  return true;
}

std::vector<Poly> box_members(const Structure& f, const BoxPoly& b, long long limit) {
  long long total = 1;
  for (const ElemSet& s : b.sets) {
    total *= s.count();
    if (total > limit)
      throw std::runtime_error("box_members: member count exceeds limit");
  }
  std::vector<Poly> out;
  if (b.length() == 0) {
    out.push_back(Poly{});
    return out;
  }
  std::vector<std::vector<int>> choices;
  for (const ElemSet& s : b.sets) choices.push_back(s.members());
  std::vector<size_t> cur(static_cast<size_t>(b.length()), 0);
  for (;;) {
    std::vector<int> tuple;
    for (size_t i = 0; i < cur.size(); ++i) tuple.push_back(choices[i][cur[i]]);
    out.push_back(make_poly(f, tuple));
    size_t k = 0;
    while (k < cur.size() && ++cur[k] == choices[k].size()) {
      cur[k] = 0;
      ++k;
    }
    if (k == cur.size()) break;
  }
  return out;
}

DegreeBounds degree_bounds(const Structure& f, const Poly& p, const Poly& q,
                           FoldOp op, bool superdomain_mul) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("degree_bounds: zero input");
  if (op == FoldOp::Sum) {
    if (p == neg_poly(f, q)) return {0, std::max(p.degree(), q.degree())};
    return {std::min(p.degree(), q.degree()), std::max(p.degree(), q.degree())};
  }
  int total = p.degree() + q.degree();
  return {superdomain_mul ? total : 0, total};
}

ElemSet evaluate(const Structure& f, const Poly& p, int a) {
  std::vector<ElemSet> terms;
  ElemSet power = f.singleton(f.one);  // a^0
  for (size_t i = 0; i < p.c.size(); ++i) {
    terms.push_back(f.mul_sets(f.singleton(p.c[i]), power));
    power = f.mul_sets(power, f.singleton(a));
  }
  return fold_sets(f, FoldOp::Sum, terms);
}

ElemSet roots(const Structure& f, const Poly& p) {
  ElemSet out(f.size);
  for (int a = 0; a < f.size; ++a)
    if (evaluate(f, p, a).contains(f.zero)) out.insert(a);
  return out;
}

std::optional<Poly> effective_root_witness(const Structure& f, const Poly& p,
                                           int alpha) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("effective_root_witness: degree >= 1 required");
  if (!evaluate(f, p, alpha).contains(f.zero)) return std::nullopt;
  Poly factor = x_minus(f, alpha);
  int m = p.degree() - 1;
  std::optional<Poly> found;
  enumerate_tuples(f.size, m + 1, [&](const std::vector<int>& tuple) {
    if (tuple.back() == f.zero) return false;  // g must have exact degree m
    Poly g{tuple};
    if (box_contains(f, box_mul(f, factor, g), p)) {
      found = g;
      return true;
    }
    return false;
  });
  if (!found)
    throw std::logic_error(
        "effective_root_witness: root without effective witness over " + f.name);
  return found;
}

EuclidResult euclid_divide(const Structure& f, const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("euclid_divide: zero divisor");
  if (num.is_zero()) return {Poly{}, Poly{}};
  const int n = num.degree(), m = den.degree();
  if (n < m) return {Poly{}, num};

  const int bm = den.c.back();
  int binv = -1;
  for (int b = 0; b < f.size; ++b)
    if (f.mul(bm, b).contains(f.one)) {
      binv = b;
      break;
    }
  if (binv < 0)
    throw std::invalid_argument("euclid_divide: leading coefficient not invertible");

  EuclidResult result;
  if (m == 0) {
    // Divide by a unit constant: pick each q_i with f_i in q_i * b0.
    std::vector<int> qc(static_cast<size_t>(n) + 1, f.zero);
    for (int i = 0; i <= n; ++i) {
      int fi = num.c[static_cast<size_t>(i)];
      int pick = -1;
      for (int c = 0; c < f.size && pick < 0; ++c)
        if (f.mul(bm, c).contains(fi)) pick = c;
      if (pick < 0) throw std::logic_error("euclid_divide: constant division failed");
      qc[static_cast<size_t>(i)] = pick;
    }
    result = {make_poly(f, std::move(qc)), Poly{}};
  } else {
    // c in a_n * b_m^{-1} with a_n in c * b_m kills the leading coefficient.
    int c = -1;
    f.mul(num.c.back(), binv).for_each([&](int cand) {
      if (c < 0 && f.mul(cand, bm).contains(num.c.back())) c = cand;
    });
    if (c < 0)
      throw std::logic_error("euclid_divide: no leading-term cancellation found");

    // t in f - c X^{n-m} g with deg t < n; take the smallest member of each
    // coefficient set.
    BoxPoly sub = box_add_boxes(f, box_of_poly(f, num),
                                box_neg(f, box_scale_shift(f, den, c, n - m)));
    if (!sub.sets[static_cast<size_t>(n)].contains(f.zero))
      throw std::logic_error("euclid_divide: leading term did not cancel");
    std::vector<int> tc(static_cast<size_t>(n), f.zero);
    for (int i = 0; i < n; ++i)
      tc[static_cast<size_t>(i)] = sub.sets[static_cast<size_t>(i)].smallest();
    Poly t = make_poly(f, std::move(tc));

    EuclidResult rec = euclid_divide(f, t, den);
    std::vector<int> qc(static_cast<size_t>(n - m) + 1, f.zero);
    for (size_t i = 0; i < rec.q.c.size(); ++i) qc[i] = rec.q.c[i];
    qc[static_cast<size_t>(n - m)] = c;
    result = {make_poly(f, std::move(qc)), rec.r};
  }

  // Independent membership oracle: f in q*g + r.
  if (!box_contains(f, box_add_poly(f, box_mul(f, result.q, den), result.r), num))
    throw std::logic_error("euclid_divide: membership oracle rejected the witness");
  return result;
}

bool is_irreducible(const Structure& f, const Poly& num) {
  if (num.is_zero() || num.degree() < 1)
    throw std::invalid_argument("is_irreducible: degree >= 1 required");
  const int d = num.degree();
  for (int d1 = 1; d1 + d1 <= d; ++d1) {
    int d2 = d - d1;
    bool reducible = enumerate_tuples(f.size, d1 + 1, [&](const std::vector<int>& gt) {
      if (gt.back() == f.zero) return false;
      Poly g{gt};
      return enumerate_tuples(f.size, d2 + 1, [&](const std::vector<int>& ht) {
        if (ht.back() == f.zero) return false;
        Poly h{ht};
        return box_contains(f, box_mul(f, g, h), num);
      });
    });
    if (reducible) return false;
  }
  return true;
}

int QuotientSuperfield::encode(const Structure& base, const Poly& p) const {
  int idx = 0, mult = 1;
  for (int i = 0; i <= rep_degree; ++i) {
    idx += coeff(base, p, i) * mult;
    mult *= base_size;
  }
  return idx;
}

Poly QuotientSuperfield::decode(int index) const {
  std::vector<int> c(static_cast<size_t>(rep_degree) + 1, 0);
  for (int i = 0; i <= rep_degree; ++i) {
    c[static_cast<size_t>(i)] = index % base_size;
    index /= base_size;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();  // base zero is index 0
  return Poly{std::move(c)};
}

Morphism QuotientSuperfield::embedding(const Structure& base) const {
  std::vector<int> map(static_cast<size_t>(base.size));
  for (int a = 0; a < base.size; ++a)
    map[static_cast<size_t>(a)] = encode(base, make_poly(base, {a}));
  return Morphism{&base, &s, std::move(map)};
}

namespace {

// All residues r with deg r <= n such that some member of `prod` lies in
// q*p + r for some q.  Boxes are product sets, so a common member of two
// boxes exists iff all cellwise intersections are nonempty; the admissible
// r_i per coefficient are then independent.
void collect_residues(const Structure& f, const Poly& p, const BoxPoly& prod,
                      const QuotientSuperfield& quot, ElemSet& mul_cell) {
  const int n = quot.rep_degree;
  const int q_len = prod.length() - (n + 1);
  enumerate_tuples(f.size, q_len, [&](const std::vector<int>& qt) {
    Poly q = make_poly(f, qt);
    BoxPoly qp = box_mul(f, q, p);
    std::vector<std::vector<int>> allowed(static_cast<size_t>(n) + 1);
    for (int i = 0; i < prod.length(); ++i) {
      ElemSet qp_i = box_cell(f, qp, i);
      const ElemSet& b_i = prod.sets[static_cast<size_t>(i)];
      if (i > n) {
        if (!qp_i.intersects(b_i)) return false;  // this q is not viable
        continue;
      }
      for (int v = 0; v < f.size; ++v)
        if (f.add_sets(qp_i, f.singleton(v)).intersects(b_i))
          allowed[static_cast<size_t>(i)].push_back(v);
      if (allowed[static_cast<size_t>(i)].empty()) return false;
    }
    // Insert every combination of admissible coefficients.
    std::vector<size_t> cur(static_cast<size_t>(n) + 1, 0);
    for (;;) {
      std::vector<int> rc;
      for (size_t i = 0; i < cur.size(); ++i) rc.push_back(allowed[i][cur[i]]);
      mul_cell.insert(quot.encode(f, make_poly(f, rc)));
      size_t k = 0;
      while (k < cur.size() && ++cur[k] == allowed[k].size()) {
        cur[k] = 0;
        ++k;
      }
      if (k == cur.size()) break;
    }
    return false;  // keep scanning all q
  });
}

}  // namespace

QuotientSuperfield quotient_superfield(const Structure& f, const Poly& p) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("quotient_superfield: modulus degree >= 1 required");
  if (f.zero != 0)
    throw std::invalid_argument("quotient_superfield: carrier must have zero at index 0");
  if (!is_irreducible(f, p))
    throw std::invalid_argument("quotient_superfield: modulus is reducible");

  QuotientSuperfield out;
  out.base_size = f.size;
  out.rep_degree = p.degree() - 1;
  const int n = out.rep_degree;

  int size = 1;
  for (int i = 0; i <= n; ++i) size *= f.size;

  out.s.name = f.name + "[x]/(" + poly_to_string(f, p) + ")";
  out.s.size = size;
  out.s.declared = Kind::Superfield;
  out.s.labels.resize(static_cast<size_t>(size));
  out.s.neg.resize(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) {
    Poly r = out.decode(i);
    out.s.labels[static_cast<size_t>(i)] = label_for_rep(f, r);
    out.s.neg[static_cast<size_t>(i)] = out.encode(f, neg_poly(f, r));
  }
  out.s.zero = out.encode(f, Poly{});
  out.s.one = out.encode(f, make_poly(f, {f.one}));
  out.s.add_cells.assign(static_cast<size_t>(size) * size, ElemSet(size));
  out.s.mul_cells.assign(static_cast<size_t>(size) * size, ElemSet(size));

  for (int a = 0; a < size; ++a) {
    Poly pa = out.decode(a);
    for (int b = a; b < size; ++b) {
      Poly pb = out.decode(b);

      ElemSet add_cell(size);
      for (const Poly& t : box_members(f, box_add(f, pa, pb)))
        add_cell.insert(out.encode(f, t));
      out.s.add_cells[static_cast<size_t>(a) * size + b] = add_cell;
      out.s.add_cells[static_cast<size_t>(b) * size + a] = add_cell;

      ElemSet mul_cell(size);
      BoxPoly prod = box_mul(f, pa, pb);
      if (prod.length() <= n + 1) {
        for (const Poly& t : box_members(f, prod)) mul_cell.insert(out.encode(f, t));
      } else {
        collect_residues(f, p, prod, out, mul_cell);
      }
      out.s.mul_cells[static_cast<size_t>(a) * size + b] = mul_cell;
      out.s.mul_cells[static_cast<size_t>(b) * size + a] = mul_cell;
    }
  }
  return out;
}

std::string poly_to_string(const Structure& f, const Poly& p) {
  if (p.is_zero()) return f.label_of(f.zero);
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    int ci = p.c[static_cast<size_t>(i)];
    if (ci == f.zero) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += f.label_of(ci);
    } else {
      if (ci != f.one) out += f.label_of(ci) + "*";
      out += "X";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly parse_poly(const Structure& f, const std::string& text) {
  // Terms separated by top-level + and -; a term is [label '*'] X ['^' k] or
  // a bare label.  '-' always denotes structural negation of the term.
  std::vector<int> coeffs;
  auto place = [&](int exponent, int value) {
    if (exponent >= static_cast<int>(coeffs.size()))
      coeffs.resize(static_cast<size_t>(exponent) + 1, f.zero);
    if (coeffs[static_cast<size_t>(exponent)] != f.zero)
      throw std::invalid_argument("parse_poly: duplicate exponent " +
                                  std::to_string(exponent));
    coeffs[static_cast<size_t>(exponent)] = value;
  };

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("parse_poly: empty input");
  while (i < text.size()) {
    skip_ws();
    bool negate = false;
    if (!first) {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw std::invalid_argument("parse_poly: expected + or - between terms");
      negate = text[i] == '-';
      ++i;
      skip_ws();
    } else if (text[i] == '+' || text[i] == '-') {
      negate = text[i] == '-';
      ++i;
      skip_ws();
    }
    first = false;

    auto read_ident = [&]() -> std::string {
      size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      if (start == i) throw std::invalid_argument("parse_poly: expected a token");
      return text.substr(start, i - start);
    };

    std::string tok = read_ident();
    int value = f.one;
    int exponent = 0;
    bool have_var = false;
    if (tok == "X" || tok == "x") {
      have_var = true;
    } else {
      int idx = f.index_of(tok);
      if (idx < 0)
        throw std::invalid_argument("parse_poly: unknown element '" + tok + "'");
      value = idx;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
        std::string v = read_ident();
        if (v != "X" && v != "x")
          throw std::invalid_argument("parse_poly: expected the variable after '*'");
        have_var = true;
      }
    }
    if (have_var) {
      exponent = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::invalid_argument("parse_poly: expected an exponent");
        exponent = std::stoi(text.substr(start, i - start));
      }
    }
    if (negate) value = f.neg_of(value);
    place(exponent, value);
    skip_ws();
  }
  return make_poly(f, std::move(coeffs));
}

}  // namespace poly
}  // namespace hyperforge
