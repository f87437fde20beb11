#include "hyperforge/forms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hyperforge/axioms.hpp"

namespace hyperforge {
namespace forms {

namespace {

void require_nonzero(const Structure& f, std::span<const int> phi) {
  for (int e : phi)
    if (e == f.zero)
      throw std::invalid_argument("forms: zero entry in a quadratic form");
}

QForm sorted_form(QForm phi) {
  std::sort(phi.begin(), phi.end());
  return phi;
}

// All pairs (x, y), x <= y, binary-isometric to (a, b); precomputed per call
// site over the nonzero elements.
struct BinaryClasses {
  const Structure& f;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> table;

  explicit BinaryClasses(const Structure& s) : f(s) {
    for (int a = 0; a < f.size; ++a) {
      if (a == f.zero) continue;
      for (int b = a; b < f.size; ++b) {
        if (b == f.zero) continue;
        auto& row = table[{a, b}];
        for (int c = 0; c < f.size; ++c) {
          if (c == f.zero) continue;
          for (int d = c; d < f.size; ++d) {
            if (d == f.zero) continue;
            if (binary_isometric(f, a, b, c, d)) row.push_back({c, d});
          }
        }
      }
    }
  }

  const std::vector<std::pair<int, int>>& of(int a, int b) const {
    return table.at({std::min(a, b), std::max(a, b)});
  }
};

// Sorted-state neighbours under one chain move.
std::vector<QForm> chain_moves(const BinaryClasses& bc, const QForm& state) {
  std::vector<QForm> out;
  const int n = static_cast<int>(state.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QForm rest;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) rest.push_back(state[static_cast<size_t>(k)]);
      for (auto [x, y] : bc.of(state[static_cast<size_t>(i)], state[static_cast<size_t>(j)])) {
        QForm next = rest;
        next.push_back(x);
        next.push_back(y);
        out.push_back(sorted_form(std::move(next)));
      }
    }
  return out;
}

// BFS over the chain-equivalence class of start; stops early when `accept`
// returns true for a visited state.
template <class Accept>
bool bfs_class(const Structure& f, const QForm& start, long long budget,
               Accept&& accept) {
  BinaryClasses bc(f);
  std::set<QForm> visited;
  std::vector<QForm> frontier;
  QForm s0 = sorted_form(start);
  visited.insert(s0);
  if (accept(s0)) return true;
  frontier.push_back(std::move(s0));
  while (!frontier.empty()) {
    std::vector<QForm> next;
    for (const QForm& cur : frontier)
      for (QForm& nb : chain_moves(bc, cur)) {
        if (visited.count(nb)) continue;
        if (static_cast<long long>(visited.size()) >= budget)
          throw BudgetError("forms: chain-equivalence state budget exceeded");
        if (accept(nb)) return true;
        visited.insert(nb);
        next.push_back(std::move(nb));
      }
    frontier = std::move(next);
  }
  return false;
}

bool has_hyperbolic_pair(const Structure& f, const QForm& state, int* a_out,
                         int* b_out) {
  for (size_t i = 0; i < state.size(); ++i)
    for (size_t j = i + 1; j < state.size(); ++j)
      if (f.neg_of(state[i]) == state[j]) {
        if (a_out) *a_out = static_cast<int>(i);
        if (b_out) *b_out = static_cast<int>(j);
        return true;
      }
  return false;
}

// sigma = <x> + result as special-group forms, navigated along the inductive
// value-set recursion; every rewrite step is a valid chain move.
QForm represent_extract(const Structure& f, const QForm& sigma, int x) {
  if (sigma.size() == 1) {
    if (sigma[0] != x)
      throw std::logic_error("represent_extract: 1-dimensional mismatch");
    return {};
  }
  // Inductive prefix value sets: D(sigma[0..k-1]).
  std::vector<ElemSet> ind(sigma.size() + 1, ElemSet(f.size));
  ind[1] = f.singleton(sigma[0]);
  for (size_t k = 2; k <= sigma.size(); ++k) {
    ElemSet acc(f.size);
    ind[k - 1].for_each([&](int y) { acc |= f.add(y, sigma[k - 1]); });
    acc.erase(f.zero);
    ind[k] = acc;
  }
  size_t m = sigma.size();
  if (!ind[m].contains(x))
    throw std::logic_error("represent_extract: x not represented");
  // Find y in D(prefix) with x in y + last.
  int last = sigma[m - 1];
  int y = -1;
  ind[m - 1].for_each([&](int cand) {
    if (y < 0 && f.add(cand, last).contains(x)) y = cand;
  });
  if (y < 0) throw std::logic_error("represent_extract: navigation failed");
  QForm prefix(sigma.begin(), sigma.end() - 1);
  QForm tail = represent_extract(f, prefix, y);
  // <y, last> = <x, y*last*x> (binary move with matching discriminant).
  int partner = f.mul_elem(f.mul_elem(y, last), x);
  if (!binary_isometric(f, y, last, x, partner))
    throw std::logic_error("represent_extract: binary move rejected");
  tail.push_back(partner);
  return tail;
}

// Smallest index i with -phi[i] represented by the inductive value set of
// the suffix phi[i+1..]; -1 when anisotropic.
int isotropy_witness(const Structure& f, const QForm& phi) {
  const int n = static_cast<int>(phi.size());
  for (int i = 0; i + 1 < n; ++i) {
    std::span<const int> suffix(phi.data() + i + 1, static_cast<size_t>(n - i - 1));
    if (value_set_inductive(f, suffix).contains(f.neg_of(phi[static_cast<size_t>(i)])))
      return i;
  }
  return -1;
}

}  // namespace

ElemSet value_set(const Structure& f, std::span<const int> phi) {
  require_nonzero(f, phi);
  if (phi.empty()) return ElemSet(f.size);
  ElemSet acc = fold(f, FoldOp::Sum, phi);
  acc.erase(f.zero);
  return acc;
}

ElemSet value_set_inductive(const Structure& f, std::span<const int> phi) {
  require_nonzero(f, phi);
  if (phi.empty()) return ElemSet(f.size);
  ElemSet acc = f.singleton(phi[0]);
  for (size_t k = 1; k < phi.size(); ++k) {
    ElemSet next(f.size);
    acc.for_each([&](int y) { next |= f.add(y, phi[k]); });
    next.erase(f.zero);
    acc = next;
  }
  return acc;
}

bool binary_isometric(const Structure& f, int a, int b, int c, int d) {
  if (a == f.zero || b == f.zero || c == f.zero || d == f.zero)
    throw std::invalid_argument("binary_isometric: zero entry");
  if (f.mul_elem(a, b) != f.mul_elem(c, d)) return false;
  int cd = f.mul_elem(c, d);
  ElemSet dset = f.add(f.one, cd);
  dset.erase(f.zero);
  return dset.contains(f.mul_elem(a, c));
}

bool isometric(const Structure& f, const QForm& phi, const QForm& psi,
               long long budget) {
  if (phi.size() != psi.size())
    throw std::invalid_argument("isometric: dimension mismatch");
  require_nonzero(f, phi);
  require_nonzero(f, psi);
  if (phi.empty()) return true;
  if (phi.size() == 1) return phi[0] == psi[0];
  if (phi.size() == 2) return binary_isometric(f, phi[0], phi[1], psi[0], psi[1]);
  QForm target = sorted_form(psi);
  return bfs_class(f, phi, budget, [&](const QForm& s) { return s == target; });
}

bool is_isotropic(const Structure& f, const QForm& phi) {
  require_nonzero(f, phi);
  return isotropy_witness(f, phi) >= 0;
}

bool is_isotropic_bfs(const Structure& f, const QForm& phi, long long budget) {
  require_nonzero(f, phi);
  if (phi.size() < 2) return false;
  return bfs_class(f, phi, budget, [&](const QForm& s) {
    return has_hyperbolic_pair(f, s, nullptr, nullptr);
  });
}

bool is_isotropic_split(const Structure& f, const QForm& phi) {
  require_nonzero(f, phi);
  const int n = static_cast<int>(phi.size());
  if (n < 2) return false;
  if (n > 24) throw std::invalid_argument("is_isotropic_split: dimension too large");
  // Subset value sets by dynamic programming over bitmasks.
  std::vector<ElemSet> d(static_cast<size_t>(1) << n, ElemSet(f.size));
  for (uint32_t mask = 1; mask < d.size(); ++mask) {
    uint32_t low = mask & (mask - 1);
    int entry = phi[static_cast<size_t>(__builtin_ctz(mask))];
    if (low == 0) {
      d[mask] = f.singleton(entry);
      continue;
    }
    ElemSet acc(f.size);
    d[mask ^ (mask & -mask)].for_each([&](int y) { acc |= f.add(y, entry); });
    acc.erase(f.zero);
    d[mask] = acc;
  }
  uint32_t full = (static_cast<uint32_t>(1) << n) - 1;
  for (uint32_t mask = 1; mask < full; ++mask) {
    ElemSet neg_other = f.neg_set(d[full ^ mask]);
    if (d[mask].intersects(neg_other)) return true;
  }
  return false;
}

WittDecomposition witt_decompose(const Structure& f, const QForm& phi) {
  require_nonzero(f, phi);
  WittDecomposition out;
  QForm cur = phi;
  for (;;) {
    int i = isotropy_witness(f, cur);
    if (i < 0) break;
    // cur = prefix + <e_i> + suffix with -e_i in D(suffix):
    // suffix = <-e_i> + rho, so cur = prefix + <e_i,-e_i> + rho.
    QForm suffix(cur.begin() + i + 1, cur.end());
    QForm rho = represent_extract(f, suffix, f.neg_of(cur[static_cast<size_t>(i)]));
    QForm next(cur.begin(), cur.begin() + i);
    next.insert(next.end(), rho.begin(), rho.end());
    cur = std::move(next);
    ++out.hyperbolic_count;
  }
  out.anisotropic = cur;
  return out;
}

WittDecomposition witt_decompose_bfs(const Structure& f, const QForm& phi,
                                     long long budget) {
  require_nonzero(f, phi);
  WittDecomposition out;
  QForm cur = sorted_form(phi);
  for (;;) {
    QForm found;
    bool isotropic = bfs_class(f, cur, budget, [&](const QForm& s) {
      if (has_hyperbolic_pair(f, s, nullptr, nullptr)) {
        found = s;
        return true;
      }
      return false;
    });
    if (!isotropic) break;
    int i = 0, j = 0;
    has_hyperbolic_pair(f, found, &i, &j);
    QForm next;
    for (int k = 0; k < static_cast<int>(found.size()); ++k)
      if (k != i && k != j) next.push_back(found[static_cast<size_t>(k)]);
    cur = std::move(next);
    ++out.hyperbolic_count;
  }
  out.anisotropic = cur;
  return out;
}

int dim_w(const Structure& f, const QForm& phi) {
  return static_cast<int>(witt_decompose(f, phi).anisotropic.size());
}

bool witt_equivalent(const Structure& f, const QForm& phi, const QForm& psi,
                     long long budget) {
  QForm an_phi = witt_decompose(f, phi).anisotropic;
  QForm an_psi = witt_decompose(f, psi).anisotropic;
  if (an_phi.size() != an_psi.size()) return false;
  return isometric(f, an_phi, an_psi, budget);
}

QForm pfister(const Structure& f, const std::vector<int>& gens) {
  require_nonzero(f, gens);
  const int n = static_cast<int>(gens.size());
  QForm out;
  out.reserve(static_cast<size_t>(1) << n);
  for (uint32_t mask = 0; mask < (static_cast<uint32_t>(1) << n); ++mask) {
    int prod = f.one;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) prod = f.mul_elem(prod, gens[static_cast<size_t>(i)]);
    out.push_back(prod);
  }
  return out;
}

QForm scale_form(const Structure& f, int s, const QForm& phi) {
  QForm out;
  for (int e : phi) out.push_back(f.mul_elem(s, e));
  return out;
}

QForm neg_form(const Structure& f, const QForm& phi) {
  QForm out;
  for (int e : phi) out.push_back(f.neg_of(e));
  return out;
}

QForm concat(const QForm& a, const QForm& b) {
  QForm out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

namespace {

// Binary isometry as a relation over ordered pairs of nonzero elements,
// with rows stored as bitsets for the equivalence / axiom scans.
struct PairRelation {
  std::vector<int> nonzero;
  std::vector<int> pos;  // element index -> position in `nonzero`, or -1
  int np = 0;            // number of ordered pairs
  std::vector<ElemSet> rows;

  int pair_id(int a, int b) const {
    return pos[static_cast<size_t>(a)] * static_cast<int>(nonzero.size()) +
           pos[static_cast<size_t>(b)];
  }
};

PairRelation build_pair_relation(const Structure& f) {
  PairRelation r;
  r.pos.assign(static_cast<size_t>(f.size), -1);
  for (int a = 0; a < f.size; ++a)
    if (a != f.zero) {
      r.pos[static_cast<size_t>(a)] = static_cast<int>(r.nonzero.size());
      r.nonzero.push_back(a);
    }
  const int k = static_cast<int>(r.nonzero.size());
  r.np = k * k;
  r.rows.assign(static_cast<size_t>(r.np), ElemSet(r.np));
  for (int a : r.nonzero)
    for (int b : r.nonzero)
      for (int c : r.nonzero)
        for (int d : r.nonzero)
          if (binary_isometric(f, a, b, c, d))
            r.rows[static_cast<size_t>(r.pair_id(a, b))].insert(r.pair_id(c, d));
  return r;
}

bool special_axioms_hold(const Structure& f) {
  PairRelation r = build_pair_relation(f);
  const auto& nz = r.nonzero;

  // Equivalence relation: reflexive, symmetric, transitive.
  for (int p = 0; p < r.np; ++p) {
    if (!r.rows[static_cast<size_t>(p)].contains(p)) return false;
    bool ok = true;
    r.rows[static_cast<size_t>(p)].for_each([&](int q) {
      if (!ok) return;
      if (!r.rows[static_cast<size_t>(q)].contains(p)) ok = false;
      else if (!r.rows[static_cast<size_t>(q)].is_subset_of(r.rows[static_cast<size_t>(p)]))
        ok = false;
    });
    if (!ok) return false;
  }
  // Commutation and <a,-a> = <1,-1>.
  for (int a : nz)
    for (int b : nz)
      if (!r.rows[static_cast<size_t>(r.pair_id(a, b))].contains(r.pair_id(b, a)))
        return false;
  for (int a : nz) {
    if (f.neg_of(a) == f.zero) continue;
    if (!r.rows[static_cast<size_t>(r.pair_id(a, f.neg_of(a)))].contains(
            r.pair_id(f.one, f.neg_of(f.one))))
      return false;
  }
  // Discriminant, transversality, scaling.
  for (int a : nz)
    for (int b : nz) {
      int ab = f.mul_elem(a, b);
      bool ok = true;
      r.rows[static_cast<size_t>(r.pair_id(a, b))].for_each([&](int q) {
        if (!ok) return;
        int c = nz[static_cast<size_t>(q / static_cast<int>(nz.size()))];
        int d = nz[static_cast<size_t>(q % static_cast<int>(nz.size()))];
        if (f.mul_elem(c, d) != ab) ok = false;  // discriminant
        if (ok && !r.rows[static_cast<size_t>(r.pair_id(a, f.neg_of(c)))].contains(
                      r.pair_id(f.neg_of(b), d)))
          ok = false;  // transversality
        if (ok)
          for (int x : nz)
            if (!r.rows[static_cast<size_t>(r.pair_id(f.mul_elem(x, a), f.mul_elem(x, b)))]
                     .contains(r.pair_id(f.mul_elem(x, c), f.mul_elem(x, d)))) {
              ok = false;  // scaling
              break;
            }
      });
      if (!ok) return false;
    }

  // One-move relation on sorted 3-forms must be transitive: every connected
  // component is a clique.
  BinaryClasses bc(f);
  std::vector<QForm> forms3;
  for (size_t i = 0; i < nz.size(); ++i)
    for (size_t j = i; j < nz.size(); ++j)
      for (size_t k = j; k < nz.size(); ++k)
        forms3.push_back({nz[i], nz[j], nz[k]});
  std::map<QForm, int> id;
  for (size_t i = 0; i < forms3.size(); ++i) id[forms3[i]] = static_cast<int>(i);
  std::vector<std::set<int>> adj(forms3.size());
  for (size_t i = 0; i < forms3.size(); ++i) {
    adj[i].insert(static_cast<int>(i));
    for (const QForm& nb : chain_moves(bc, forms3[i])) adj[i].insert(id.at(nb));
  }
  // Symmetric closure, then component = union of neighbourhoods must equal
  // each member's neighbourhood.
  for (size_t i = 0; i < forms3.size(); ++i)
    for (int j : adj[i]) adj[static_cast<size_t>(j)].insert(static_cast<int>(i));
  for (size_t i = 0; i < forms3.size(); ++i)
    for (int j : adj[i])
      if (adj[static_cast<size_t>(j)] != adj[i]) return false;
  return true;
}

}  // namespace

HyperfieldClasses classify_hyperfield(const Structure& f) {
  if (!check_axioms(f, Kind::Hyperfield).passed())
    throw std::invalid_argument("classify_hyperfield: " + f.name +
                                " fails the hyperfield axioms");
  HyperfieldClasses out;
  bool squares_one = true;
  for (int a = 0; a < f.size; ++a) {
    if (a == f.zero) continue;
    if (!f.mul(a, a).is_singleton(f.one)) squares_one = false;
  }
  out.pre_special = squares_one && f.neg_of(f.one) != f.one;
  out.real_reduced = out.pre_special && f.add(f.one, f.one).is_singleton(f.one);
  out.formally_real = !sums_of_squares(f).contains(f.neg_of(f.one));
  out.rooted = true;
  for (int a = 0; a < f.size && out.rooted; ++a) {
    if (a == f.zero) continue;
    for (int b = 0; b < f.size && out.rooted; ++b) {
      if (b == f.zero) continue;
      const ElemSet& cell = f.add(a, b);
      if (!cell.contains(a) || !cell.contains(b)) out.rooted = false;
    }
  }
  out.special = out.pre_special && special_axioms_hold(f);
  return out;
}

}  // namespace forms
}  // namespace hyperforge
