#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperforge/report.hpp"
#include "hyperforge/set.hpp"

namespace hyperforge {

/// Axiom suites / classification tags for finite multivalued structures.
///
/// Additive part means (carrier, +, -, 0); multiplicative part (carrier, *, 1).
/// Multigroup and Multimonoid check those parts in isolation, the remaining
/// kinds check the whole signature.
enum class Kind {
  Multigroup,       // additive part is a commutative multigroup (M1-M4)
  Multimonoid,      // multiplicative part is a commutative multimonoid
  Multiring,        // multigroup + single-valued commutative monoid + weak distributivity
  Hyperring,        // multiring with distributive equality a(b+c) = ab+ac
  Superring,        // set-valued multiplication, weak distributivity, rule of signs
  Superdomain,      // superring, nontrivial, 0 in a*b iff a=0 or b=0
  QuasiSuperfield,  // superring, nontrivial, nonzero elements invertible
  Superfield,       // superdomain + quasi-superfield
  Hyperfield,       // multiring with nonzero elements invertible (= multifield)
  Full,             // superring with distributive equality c(a+b) = ca+cb
  Ring,             // single-valued everywhere, classical commutative ring
};

const char* kind_name(Kind k);
std::optional<Kind> parse_kind(const std::string& name);

/// A finite carrier with set-valued addition and multiplication tables, a
/// negation involution and distinguished 0, 1.  Houses every structure in the
/// hierarchy (multigroups, multirings, hyperfields, superrings, ...); strict
/// operations are stored as singleton cells.
///
/// By convention index 0 is the zero element and index 1 (when present) the
/// one element; loaders and constructors normalize to that order.  Structures
/// are immutable after construction and all queries are const.
struct Structure {
  std::string name;
  int size = 0;
  std::vector<std::string> labels;
  int zero = -1;
  int one = -1;
  std::vector<int> neg;
  std::vector<ElemSet> add_cells;  // size*size, row-major, symmetric
  std::vector<ElemSet> mul_cells;
  Kind declared = Kind::Superring;

  const ElemSet& add(int a, int b) const {
    return add_cells[static_cast<size_t>(a) * size + b];
  }
  const ElemSet& mul(int a, int b) const {
    return mul_cells[static_cast<size_t>(a) * size + b];
  }
  int neg_of(int a) const { return neg[static_cast<size_t>(a)]; }

  /// Multiplication as an element; requires the cell to be a singleton.
  int mul_elem(int a, int b) const;

  /// Pairwise set extensions of the tables: union of op(x, y) over members.
  ElemSet add_sets(const ElemSet& x, const ElemSet& y) const;
  ElemSet mul_sets(const ElemSet& x, const ElemSet& y) const;
  ElemSet scale(int a, const ElemSet& x) const;  // union of mul(a, m)
  ElemSet neg_set(const ElemSet& x) const;

  bool single_valued_mul() const;
  bool single_valued_add() const;

  ElemSet empty_set() const { return ElemSet(size); }
  ElemSet singleton(int i) const { return ElemSet::single(size, i); }
  ElemSet nonzero_set() const;

  int index_of(const std::string& label) const;  // -1 when absent
  const std::string& label_of(int i) const { return labels[static_cast<size_t>(i)]; }
};

/// Well-formedness of the tables themselves: totality (no empty cell),
/// cellwise commutativity, negation is an involution fixing zero, labels
/// unique, zero/one indices valid.  This is checked before any axiom suite.
Report validate_structure(const Structure& s);

/// Helper used by builders: create a structure with all cells empty.
Structure make_blank(const std::string& name, std::vector<std::string> labels,
                     int zero, int one);

}  // namespace hyperforge
