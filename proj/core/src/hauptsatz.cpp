#include "hyperforge/hauptsatz.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "hyperforge/quadext.hpp"

namespace hyperforge {
namespace hauptsatz {

const char* case_name(Case c) {
  switch (c) {
    case Case::I: return "I";
    case Case::II: return "II";
    case Case::III: return "III";
  }
  return "?";
}

namespace {

std::vector<int> nonzero_elements(const Structure& f) {
  std::vector<int> out;
  for (int a = 0; a < f.size; ++a)
    if (a != f.zero) out.push_back(a);
  return out;
}

void require_formally_real_special(const Structure& f) {
  forms::HyperfieldClasses cls = forms::classify_hyperfield(f);
  if (!cls.special || !cls.formally_real)
    throw std::invalid_argument(f.name +
                                " is not a formally real special hyperfield");
}

long long ipow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > (1LL << 62) / std::max(base, 1LL)) return 1LL << 62;
    out *= base;
  }
  return out;
}

}  // namespace

forms::QForm assemble_term(const Structure& f, const Term& term) {
  forms::QForm scaled = forms::scale_form(f, term.scalar, forms::pfister(f, term.gens));
  if (term.sign < 0) scaled = forms::neg_form(f, scaled);
  return scaled;
}

forms::QForm assemble(const Structure& f, const InRepresentation& rep) {
  forms::QForm out;
  for (const Term& t : rep.terms) out = forms::concat(out, assemble_term(f, t));
  return out;
}

void for_each_representation(const Structure& f, int n, int terms, GenMode mode,
                             const std::function<void(const InRepresentation&)>& fn,
                             long long budget, uint64_t seed, long long count) {
  if (n < 1 || terms < 1)
    throw std::invalid_argument("for_each_representation: n >= 1 and terms >= 1");
  std::vector<int> units = nonzero_elements(f);
  const long long unit_count = static_cast<long long>(units.size());

  if (mode == GenMode::Sampled) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, units.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (long long i = 0; i < count; ++i) {
      InRepresentation rep;
      for (int t = 0; t < terms; ++t) {
        Term term;
        term.sign = coin(rng) ? +1 : -1;
        term.scalar = units[pick(rng)];
        term.gens.resize(static_cast<size_t>(n));
        for (int g = 0; g < n; ++g) term.gens[static_cast<size_t>(g)] = units[pick(rng)];
        rep.terms.push_back(std::move(term));
      }
      fn(rep);
    }
    return;
  }

  long long per_term = ipow(unit_count, n + 1);
  long long total = ipow(per_term, terms);
  if (total > budget)
    throw std::runtime_error(
        "for_each_representation: exhaustive space " + std::to_string(total) +
        " exceeds the budget " + std::to_string(budget));

  // Term ids enumerate (scalar, gens) in mixed radix over the units.
  auto term_of_id = [&](long long id) {
    Term t;
    t.sign = +1;
    t.scalar = units[static_cast<size_t>(id % unit_count)];
    id /= unit_count;
    t.gens.resize(static_cast<size_t>(n));
    for (int g = 0; g < n; ++g) {
      t.gens[static_cast<size_t>(g)] = units[static_cast<size_t>(id % unit_count)];
      id /= unit_count;
    }
    return t;
  };

  std::vector<long long> ids(static_cast<size_t>(terms), 0);
  InRepresentation rep;
  rep.terms.resize(static_cast<size_t>(terms));
  for (;;) {
    for (int t = 0; t < terms; ++t)
      rep.terms[static_cast<size_t>(t)] = term_of_id(ids[static_cast<size_t>(t)]);
    fn(rep);
    int k = 0;
    while (k < terms && ++ids[static_cast<size_t>(k)] == per_term) {
      ids[static_cast<size_t>(k)] = 0;
      ++k;
    }
    if (k == terms) break;
  }
}

std::vector<std::pair<forms::QForm, InRepresentation>> gen_in(
    const Structure& f, int n, int terms, GenMode mode, long long budget,
    uint64_t seed, long long count) {
  std::vector<std::pair<forms::QForm, InRepresentation>> out;
  for_each_representation(
      f, n, terms, mode,
      [&](const InRepresentation& rep) { out.emplace_back(assemble(f, rep), rep); },
      budget, seed, count);
  return out;
}

HauptsatzReport check_hauptsatz(const Structure& f, int n, int terms,
                                long long budget) {
  require_formally_real_special(f);
  HauptsatzReport report;
  const int bound = 1 << n;

  // dim_W depends only on the sorted entry multiset; memoize on it.  The
  // state count is bounded by the number of multisets, far below the number
  // of representations.
  std::map<forms::QForm, int> memo;
  for_each_representation(
      f, n, terms, GenMode::Exhaustive,
      [&](const InRepresentation& rep) {
        forms::QForm form = assemble(f, rep);
        std::sort(form.begin(), form.end());
        auto it = memo.find(form);
        int d;
        if (it != memo.end()) {
          d = it->second;
        } else {
          d = forms::dim_w(f, form);
          memo.emplace(std::move(form), d);
        }
        ++report.checked;
        if (d > 0 && d < bound) report.violations.push_back({rep, d});
      },
      budget);
  return report;
}

namespace {

/// Tower of reduced quotients over the given scalars, where scalars that
/// collapse to [1] at their stage extend trivially and are skipped (adding a
/// square root of 1 changes nothing).  Returns the final stage and the
/// composed class map; an empty scalar list yields the input structure with
/// the identity map.
struct ReducedStage {
  std::shared_ptr<const Structure> top;
  std::vector<int> map;
};

ReducedStage reduced_tower_allowing_trivial(std::shared_ptr<const Structure> base,
                                            const std::vector<int>& scalars) {
  ReducedStage out;
  out.top = std::move(base);
  out.map.resize(static_cast<size_t>(out.top->size));
  for (int i = 0; i < out.top->size; ++i) out.map[static_cast<size_t>(i)] = i;
  for (int s : scalars) {
    int img = out.map[static_cast<size_t>(s)];
    if (img == out.top->zero)
      throw std::logic_error("reduced tower: scalar collapsed to [0]");
    if (img == out.top->one) continue;  // trivial extension
    quadext::Extension e = quadext::extend(*out.top, img);
    quadext::SQuotient sq = quadext::s_quotient(e, false);
    std::vector<int> next_map(out.map.size());
    for (size_t i = 0; i < out.map.size(); ++i)
      next_map[i] = sq.cls[static_cast<size_t>(out.map[i])];  // base embeds at identical indices
    out.top = std::make_shared<const Structure>(std::move(sq.s));
    out.map = std::move(next_map);
  }
  return out;
}

forms::QForm push_form(const std::vector<int>& map, const forms::QForm& phi) {
  forms::QForm out;
  for (int e : phi) out.push_back(map[static_cast<size_t>(e)]);
  return out;
}

Term push_term(const std::vector<int>& map, const Term& t) {
  Term out = t;
  out.scalar = map[static_cast<size_t>(t.scalar)];
  for (int& g : out.gens) g = map[static_cast<size_t>(g)];
  return out;
}

}  // namespace

ProofTrace trace_proof(const Structure& f, const InRepresentation& rep) {
  require_formally_real_special(f);
  if (rep.terms.empty()) throw std::invalid_argument("trace_proof: empty representation");
  const int n = static_cast<int>(rep.terms.front().gens.size());
  for (const Term& t : rep.terms) {
    if (t.sign < 0)
      throw std::invalid_argument("trace_proof: negative signs are not admitted "
                                  "(the descent assumes all signs positive)");
    if (static_cast<int>(t.gens.size()) != n)
      throw std::invalid_argument("trace_proof: mixed Pfister fold counts");
  }

  ProofTrace trace;
  trace.bound = 1 << n;

  auto cur = std::make_shared<const Structure>(f);
  std::vector<Term> cur_terms = rep.terms;

  if (forms::is_isotropic(*cur, assemble_term(*cur, cur_terms.front())))
    throw std::invalid_argument(
        "trace_proof: the first Pfister form must be anisotropic");

  forms::QForm whole = assemble(f, rep);
  int d = forms::dim_w(f, whole);
  if (d == 0) {
    trace.steps.push_back({f.name, Case::I, 0});
    trace.certified = true;  // hyperbolic, consistent with the bound
    return trace;
  }
  if (cur_terms.size() == 1) {
    trace.steps.push_back({f.name, Case::II, d});
    trace.certified = d >= trace.bound;
    return trace;
  }
  trace.steps.push_back({f.name, Case::III, d});

  int stage_no = 0;
  while (true) {
    ++stage_no;
    const Term head = cur_terms.front();
    forms::QForm head_form = assemble_term(*cur, head);

    ReducedStage stage = reduced_tower_allowing_trivial(cur, head.gens);
    std::string stage_name = "stage" + std::to_string(stage_no) + ":" + stage.top->name;

    // Push the whole worked form: the head image plus the pushed tail.
    forms::QForm pushed = push_form(stage.map, head_form);
    std::vector<Term> tail;
    for (size_t i = 1; i < cur_terms.size(); ++i)
      tail.push_back(push_term(stage.map, cur_terms[i]));
    forms::QForm tail_form;
    for (const Term& t : tail)
      tail_form = forms::concat(tail_form, assemble_term(*stage.top, t));
    forms::QForm worked = forms::concat(pushed, tail_form);

    int d_next = forms::dim_w(*stage.top, worked);
    if (d_next > d)
      trace.diagnostics.push_back(
          "dim_W increased from " + std::to_string(d) + " to " +
          std::to_string(d_next) + " at " + stage_name);
    d = d_next;

    if (d == 0) {
      trace.steps.push_back({stage_name, Case::I, 0});
      trace.certified = true;
      break;
    }
    if (!forms::is_isotropic(*stage.top, tail_form)) {
      trace.steps.push_back({stage_name, Case::II, d});
      trace.certified = true;  // tail anisotropic of dimension >= 2^n
      break;
    }
    // Case III: find an anisotropic head among the pushed tail terms.
    int next_head = -1;
    for (size_t i = 0; i < tail.size(); ++i)
      if (!forms::is_isotropic(*stage.top, assemble_term(*stage.top, tail[i]))) {
        next_head = static_cast<int>(i);
        break;
      }
    if (next_head < 0) {
      // Every pushed term is isotropic, hence hyperbolic: the descent ends.
      trace.steps.push_back({stage_name, Case::I, d});
      trace.certified = d == 0 || d >= trace.bound;
      break;
    }
    trace.steps.push_back({stage_name, Case::III, d});
    std::swap(tail[0], tail[static_cast<size_t>(next_head)]);
    cur = stage.top;
    cur_terms = std::move(tail);
  }
  return trace;
}

}  // namespace hauptsatz
}  // namespace hyperforge
