#pragma once

#include <string>
#include <vector>

namespace hyperforge {

/// One axiom failure with its lexicographically smallest witness tuple
/// (element indices) and a human-readable detail line.
struct Violation {
  std::string axiom;
  std::vector<int> witness;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }

  void fail(std::string axiom, std::vector<int> witness, std::string detail = "") {
    violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }

  /// Keeps only the first (lexicographically smallest, given scan order)
  /// witness per axiom name.
  bool has(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }

  void merge(const Report& other) {
    for (const auto& v : other.violations)
      if (!has(v.axiom)) violations.push_back(v);
  }
};

}  // namespace hyperforge
