#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperforge/morphism.hpp"
#include "hyperforge/structure.hpp"

namespace hyperforge {
namespace catalog {

enum class Family {
  K,                  // Krasner multifield {0,1}, 1+1={0,1}
  Q2,                 // {-1,0,1} with 1-1={-1,0,1}
  Hp,                 // H_p on {0..p-1}, a+a=H_p, a+b={a,b}, -a=a
  Kaleidoscope,       // X_n on {-n..n}
  Fan,                // real reduced hyperfield of the fan group of order 2^k
  ModRing,            // Z/n as a strict multiring
  FieldSquareClasses  // Z/p modulo nonzero squares (Marshall quotient)
};

struct CatalogKey {
  Family family;
  int param = 0;
};

/// Builds the named structure with exactly its defining tables.
/// Hp requires a prime parameter, Fan a power of two >= 2,
/// FieldSquareClasses an odd prime.
Structure make(const CatalogKey& key);

/// Name resolution used by the CLI: "K", "Q2", "H3", "X2", "FAN4", "Zmod6",
/// "SQ7".  Returns nullopt for unknown names.
std::optional<CatalogKey> parse_name(const std::string& name);
Structure make(const std::string& name);

/// The roster exercised by tests and `catalog-list`.
std::vector<std::string> roster();

/// One cell of the tropical hyperfield over (Z, +, <=), probed at bounded
/// integers.  Infinity (the tropical zero) is encoded by has_infinity /
/// infinite operands via TropicalArg.
struct TropicalArg {
  int64_t value = 0;
  bool infinite = false;
  static TropicalArg inf() { return {0, true}; }
  static TropicalArg of(int64_t v) { return {v, false}; }
};

enum class TropicalOp { Plus, Times };

struct TropicalCell {
  std::vector<int64_t> values;  // finite members inside the probe window
  bool has_infinity = false;    // infinity belongs to the cell
  bool unbounded_above = false; // cell continues beyond the window
};

TropicalCell tropical_probe(TropicalArg g, TropicalArg h, TropicalOp op,
                            int window = 16);

/// Backtracking search for a full isomorphism fixing 0 and 1 and respecting
/// negation.  Deterministic: candidates are scanned in index order, so the
/// same inputs always give the same map.  Returns nullopt when none exists.
std::optional<std::vector<int>> find_isomorphism(const Structure& a,
                                                 const Structure& b);

}  // namespace catalog
}  // namespace hyperforge
