#include "hyperforge/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "hyperforge/marshall.hpp"

namespace hyperforge {
namespace catalog {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

void set_cell(std::vector<ElemSet>& cells, int n, int a, int b, const ElemSet& v) {
  cells[static_cast<size_t>(a) * n + b] = v;
  cells[static_cast<size_t>(b) * n + a] = v;
}

Structure make_k() {
  Structure s = make_blank("K", {"0", "1"}, 0, 1);
  s.declared = Kind::Hyperfield;
  set_cell(s.add_cells, 2, 0, 0, s.singleton(0));
  set_cell(s.add_cells, 2, 0, 1, s.singleton(1));
  ElemSet both(2);
  both.insert(0);
  both.insert(1);
  set_cell(s.add_cells, 2, 1, 1, both);
  set_cell(s.mul_cells, 2, 0, 0, s.singleton(0));
  set_cell(s.mul_cells, 2, 0, 1, s.singleton(0));
  set_cell(s.mul_cells, 2, 1, 1, s.singleton(1));
  return s;
}

Structure make_q2() {
  Structure s = make_blank("Q2", {"0", "1", "-1"}, 0, 1);
  s.declared = Kind::Hyperfield;
  s.neg = {0, 2, 1};
  for (int x = 0; x < 3; ++x) set_cell(s.add_cells, 3, 0, x, s.singleton(x));
  set_cell(s.add_cells, 3, 1, 1, s.singleton(1));
  set_cell(s.add_cells, 3, 2, 2, s.singleton(2));
  set_cell(s.add_cells, 3, 1, 2, ElemSet::full(3));
  for (int x = 0; x < 3; ++x) set_cell(s.mul_cells, 3, 0, x, s.singleton(0));
  set_cell(s.mul_cells, 3, 1, 1, s.singleton(1));
  set_cell(s.mul_cells, 3, 1, 2, s.singleton(2));
  set_cell(s.mul_cells, 3, 2, 2, s.singleton(1));
  return s;
}

Structure make_hp(int p) {
  if (!is_prime(p)) throw std::invalid_argument("Hp requires a prime parameter");
  std::vector<std::string> labels;
  for (int i = 0; i < p; ++i) labels.push_back(std::to_string(i));
  Structure s = make_blank("H" + std::to_string(p), labels, 0, 1 % p);
  s.declared = Kind::Hyperfield;
  // -a = a for every a.
  for (int a = 0; a < p; ++a) {
    set_cell(s.add_cells, p, 0, a, s.singleton(a));
    for (int b = std::max(a, 1); b < p; ++b) {
      if (a == 0) break;
      if (a == b)
        set_cell(s.add_cells, p, a, b, ElemSet::full(p));
      else {
        ElemSet two(p);
        two.insert(a);
        two.insert(b);
        set_cell(s.add_cells, p, a, b, two);
      }
    }
    for (int b = a; b < p; ++b)
      set_cell(s.mul_cells, p, a, b, s.singleton((a * b) % p));
  }
  return s;
}

// Kaleidoscope index layout: 0 -> "0", 2k-1 -> "k", 2k -> "-k".
int kal_index(int v) { return v == 0 ? 0 : (v > 0 ? 2 * v - 1 : -2 * v); }
int kal_value(int idx) { return idx == 0 ? 0 : (idx % 2 ? (idx + 1) / 2 : -idx / 2); }

Structure make_kaleidoscope(int n) {
  if (n < 0) throw std::invalid_argument("Kaleidoscope requires n >= 0");
  const int size = 2 * n + 1;
  std::vector<std::string> labels(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) labels[static_cast<size_t>(i)] = std::to_string(kal_value(i));
  Structure s = make_blank("X" + std::to_string(n), labels, 0, n >= 1 ? 1 : 0);
  s.declared = Kind::Multiring;
  for (int i = 0; i < size; ++i) s.neg[static_cast<size_t>(i)] = kal_index(-kal_value(i));
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) {
      int a = kal_value(i), b = kal_value(j);
      ElemSet sum(size);
      if (b == -a) {
        for (int v = -std::abs(a); v <= std::abs(a); ++v) sum.insert(kal_index(v));
      } else if (std::abs(b) <= std::abs(a)) {
        sum.insert(kal_index(a));
      } else {
        sum.insert(kal_index(b));
      }
      // |a| = |b| with b != -a means a = b; both branches give {a}.
      set_cell(s.add_cells, size, i, j, sum);
      int prod;
      if (a == 0 || b == 0)
        prod = 0;
      else
        prod = ((a > 0) == (b > 0) ? 1 : -1) * std::max(std::abs(a), std::abs(b));
      set_cell(s.mul_cells, size, i, j, s.singleton(kal_index(prod)));
    }
  return s;
}

std::string fan_label(int mask) {
  static const char* gens = "abc";
  std::string word;
  for (int g = 0; g < 3; ++g)
    if (mask >> (g + 1) & 1) word += gens[g];
  std::string sign = (mask & 1) ? "-" : "";
  if (word.empty()) return sign + "1";
  return sign + word;
}

Structure make_fan(int order) {
  if (!is_power_of_two(order) || order < 2)
    throw std::invalid_argument("Fan requires a power-of-two parameter >= 2");
  int k = 0;
  while ((1 << k) < order) ++k;
  if (k > 4) throw std::invalid_argument("Fan parameter too large");
  const int size = order + 1;
  std::vector<std::string> labels(static_cast<size_t>(size));
  labels[0] = "0";
  for (int mask = 0; mask < order; ++mask) labels[static_cast<size_t>(mask + 1)] = fan_label(mask);
  Structure s = make_blank("FAN" + std::to_string(order), labels, 0, 1);
  s.declared = Kind::Hyperfield;
  for (int mask = 0; mask < order; ++mask) s.neg[static_cast<size_t>(mask + 1)] = (mask ^ 1) + 1;
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) {
      if (i == 0) {
        set_cell(s.add_cells, size, i, j, s.singleton(j));
        set_cell(s.mul_cells, size, i, j, s.singleton(0));
        continue;
      }
      int mi = i - 1, mj = j - 1;
      set_cell(s.mul_cells, size, i, j, s.singleton((mi ^ mj) + 1));
      ElemSet sum(size);
      if (i == j)
        sum.insert(i);
      else if (mi == (mj ^ 1))
        sum = ElemSet::full(size);  // a - a is the whole carrier
      else {
        sum.insert(i);
        sum.insert(j);
      }
      set_cell(s.add_cells, size, i, j, sum);
    }
  return s;
}

Structure make_modring(int n) {
  if (n < 1) throw std::invalid_argument("ModRing requires n >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  Structure s = make_blank("Zmod" + std::to_string(n), labels, 0, n > 1 ? 1 : 0);
  s.declared = Kind::Ring;
  for (int i = 0; i < n; ++i) s.neg[static_cast<size_t>(i)] = (n - i) % n;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      set_cell(s.add_cells, n, a, b, s.singleton((a + b) % n));
      set_cell(s.mul_cells, n, a, b, s.singleton((a * b) % n));
    }
  return s;
}

Structure make_square_classes(int p) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("FieldSquareClasses requires an odd prime");
  Structure zp = make_modring(p);
  marshall::MarshallQuotient q =
      marshall::marshall_quotient(zp, marshall::nonzero_squares(zp));
  Structure s = std::move(q.quotient);
  s.name = "SQ" + std::to_string(p);
  s.declared = Kind::Hyperfield;
  return s;
}

}  // namespace

Structure make(const CatalogKey& key) {
  switch (key.family) {
    case Family::K: return make_k();
    case Family::Q2: return make_q2();
    case Family::Hp: return make_hp(key.param);
    case Family::Kaleidoscope: return make_kaleidoscope(key.param);
    case Family::Fan: return make_fan(key.param);
    case Family::ModRing: return make_modring(key.param);
    case Family::FieldSquareClasses: return make_square_classes(key.param);
  }
  throw std::invalid_argument("unknown catalog family");
}

std::optional<CatalogKey> parse_name(const std::string& name) {
  auto numeric_suffix = [&](size_t at) -> std::optional<int> {
    if (at >= name.size()) return std::nullopt;
    for (size_t i = at; i < name.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    return std::stoi(name.substr(at));
  };
  if (name == "K") return CatalogKey{Family::K, 0};
  if (name == "Q2") return CatalogKey{Family::Q2, 0};
  if (name.rfind("FAN", 0) == 0)
    if (auto p = numeric_suffix(3)) return CatalogKey{Family::Fan, *p};
  if (name.rfind("Zmod", 0) == 0)
    if (auto p = numeric_suffix(4)) return CatalogKey{Family::ModRing, *p};
  if (name.rfind("SQ", 0) == 0)
    if (auto p = numeric_suffix(2)) return CatalogKey{Family::FieldSquareClasses, *p};
  if (name.size() >= 2 && name[0] == 'H')
    if (auto p = numeric_suffix(1)) return CatalogKey{Family::Hp, *p};
  if (name.size() >= 2 && name[0] == 'X')
    if (auto p = numeric_suffix(1)) return CatalogKey{Family::Kaleidoscope, *p};
  return std::nullopt;
}

Structure make(const std::string& name) {
  auto key = parse_name(name);
  if (!key) throw std::invalid_argument("unknown catalog name '" + name + "'");
  return make(*key);
}

std::vector<std::string> roster() {
  return {"K",    "Q2",   "H3",    "H5",    "X1",  "X2",
          "FAN2", "FAN4", "FAN8",  "FAN16", "Zmod6", "Zmod7", "SQ7"};
}

TropicalCell tropical_probe(TropicalArg g, TropicalArg h, TropicalOp op, int window) {
  TropicalCell out;
  if (op == TropicalOp::Times) {
    // Tropical product is addition; infinity (the tropical zero) absorbs.
    if (g.infinite || h.infinite)
      out.has_infinity = true;
    else
      out.values.push_back(g.value + h.value);
    return out;
  }
  // Tropical sum.
  if (g.infinite && h.infinite) {
    out.has_infinity = true;
    return out;
  }
  if (g.infinite || h.infinite) {
    out.values.push_back(g.infinite ? h.value : g.value);
    return out;
  }
  if (g.value != h.value) {
    out.values.push_back(std::min(g.value, h.value));
    return out;
  }
  // g + g = {x : x >= g} together with infinity; truncate to the window.
  for (int64_t v = g.value; v <= g.value + window; ++v) out.values.push_back(v);
  out.has_infinity = true;
  out.unbounded_above = true;
  return out;
}

namespace {

// Label-independent per-element invariants used to prune the isomorphism
// search.
struct Profile {
  bool self_neg;
  int add_diag, mul_diag, add_with_neg;
  std::vector<int> add_row_sizes, mul_row_sizes;

  bool operator==(const Profile&) const = default;
  auto key() const {
    return std::tie(self_neg, add_diag, mul_diag, add_with_neg, add_row_sizes,
                    mul_row_sizes);
  }
  bool operator<(const Profile& o) const { return key() < o.key(); }
};

Profile profile_of(const Structure& s, int a) {
  Profile p;
  p.self_neg = s.neg_of(a) == a;
  p.add_diag = s.add(a, a).count();
  p.mul_diag = s.mul(a, a).count();
  p.add_with_neg = s.add(a, s.neg_of(a)).count();
  for (int b = 0; b < s.size; ++b) {
    p.add_row_sizes.push_back(s.add(a, b).count());
    p.mul_row_sizes.push_back(s.mul(a, b).count());
  }
  std::sort(p.add_row_sizes.begin(), p.add_row_sizes.end());
  std::sort(p.mul_row_sizes.begin(), p.mul_row_sizes.end());
  return p;
}

struct IsoSearch {
  const Structure& A;
  const Structure& B;
  std::vector<Profile> pa, pb;
  std::vector<int> order;  // assignment order over A's elements
  std::vector<int> f;      // A index -> B index or -1
  std::vector<char> used;  // B indices already taken

  IsoSearch(const Structure& a, const Structure& b)
      : A(a), B(b), f(static_cast<size_t>(a.size), -1), used(static_cast<size_t>(b.size), 0) {}

  bool consistent(int a, int b) const {
    // Check every cell between a and already-assigned elements, both ways.
    for (int x = 0; x < A.size; ++x) {
      if (f[static_cast<size_t>(x)] < 0) continue;
      int fx = f[static_cast<size_t>(x)];
      const ElemSet& add_a = A.add(a, x);
      const ElemSet& add_b = B.add(b, fx);
      const ElemSet& mul_a = A.mul(a, x);
      const ElemSet& mul_b = B.mul(b, fx);
      if (add_a.count() != add_b.count() || mul_a.count() != mul_b.count())
        return false;
      bool ok = true;
      add_a.for_each([&](int z) {
        if (ok && f[static_cast<size_t>(z)] >= 0 && !add_b.contains(f[static_cast<size_t>(z)])) ok = false;
      });
      if (!ok) return false;
      mul_a.for_each([&](int z) {
        if (ok && f[static_cast<size_t>(z)] >= 0 && !mul_b.contains(f[static_cast<size_t>(z)])) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }

  bool verify_full() const {
    for (int a = 0; a < A.size; ++a)
      for (int b = a; b < A.size; ++b) {
        ElemSet add_img(B.size), mul_img(B.size);
        A.add(a, b).for_each([&](int z) { add_img.insert(f[static_cast<size_t>(z)]); });
        A.mul(a, b).for_each([&](int z) { mul_img.insert(f[static_cast<size_t>(z)]); });
        if (add_img != B.add(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)])) return false;
        if (mul_img != B.mul(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)])) return false;
      }
    return true;
  }

  bool assign(size_t step) {
    if (step == order.size()) return verify_full();
    int a = order[step];
    if (f[static_cast<size_t>(a)] >= 0) return assign(step + 1);

    int forced = -1;
    if (f[static_cast<size_t>(A.neg_of(a))] >= 0)
      forced = B.neg_of(f[static_cast<size_t>(A.neg_of(a))]);

    for (int b = 0; b < B.size; ++b) {
      if (forced >= 0 && b != forced) continue;
      if (used[static_cast<size_t>(b)]) continue;
      if (!(pa[static_cast<size_t>(a)] == pb[static_cast<size_t>(b)])) continue;
      if (!consistent(a, b)) continue;
      f[static_cast<size_t>(a)] = b;
      used[static_cast<size_t>(b)] = 1;
      int na = A.neg_of(a), nb = B.neg_of(b);
      bool paired = false;
      if (na != a && f[static_cast<size_t>(na)] < 0) {
        if (!used[static_cast<size_t>(nb)] && consistent(na, nb)) {
          f[static_cast<size_t>(na)] = nb;
          used[static_cast<size_t>(nb)] = 1;
          paired = true;
        } else {
          f[static_cast<size_t>(a)] = -1;
          used[static_cast<size_t>(b)] = 0;
          continue;
        }
      }
      if (assign(step + 1)) return true;
      if (paired) {
        f[static_cast<size_t>(na)] = -1;
        used[static_cast<size_t>(nb)] = 0;
      }
      f[static_cast<size_t>(a)] = -1;
      used[static_cast<size_t>(b)] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Structure& a,
                                                 const Structure& b) {
  if (a.size != b.size) return std::nullopt;
  IsoSearch search(a, b);
  for (int i = 0; i < a.size; ++i) search.pa.push_back(profile_of(a, i));
  for (int i = 0; i < b.size; ++i) search.pb.push_back(profile_of(b, i));

  // Profile multisets must match.
  {
    auto sa = search.pa;
    auto sb = search.pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    for (size_t i = 0; i < sa.size(); ++i)
      if (!(sa[i] == sb[i])) return std::nullopt;
  }

  search.f[static_cast<size_t>(a.zero)] = b.zero;
  search.used[static_cast<size_t>(b.zero)] = 1;
  if (a.one != a.zero) {
    if (!(search.pa[static_cast<size_t>(a.one)] == search.pb[static_cast<size_t>(b.one)]))
      return std::nullopt;
    search.f[static_cast<size_t>(a.one)] = b.one;
    search.used[static_cast<size_t>(b.one)] = 1;
    int na = a.neg_of(a.one), nb = b.neg_of(b.one);
    if (na != a.one) {
      search.f[static_cast<size_t>(na)] = nb;
      search.used[static_cast<size_t>(nb)] = 1;
    }
  }

  // Most-constrained-first assignment order: rarer profiles come earlier.
  std::map<Profile, int> freq;
  for (const auto& p : search.pa) ++freq[p];
  for (int i = 0; i < a.size; ++i) search.order.push_back(i);
  std::sort(search.order.begin(), search.order.end(), [&](int x, int y) {
    int fx = freq[search.pa[static_cast<size_t>(x)]];
    int fy = freq[search.pa[static_cast<size_t>(y)]];
    if (fx != fy) return fx < fy;
    return x < y;
  });

  if (!search.assign(0)) return std::nullopt;
  return search.f;
}

}  // namespace catalog
}  // namespace hyperforge
