#pragma once

#include <stdexcept>
#include <string>

#include "hyperforge/structure.hpp"

namespace hyperforge {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical JSON text of a structure:
///   {"name": str, "elements": [str], "zero": str, "one": str,
///    "neg": {elt: elt}, "add": {"a|b": [elts]}, "mul": {"a|b": [elts]},
///    "kind": str}
/// Cells are emitted for index pairs a <= b only; keys are sorted, so the
/// output is byte-stable for a given structure.
std::string structure_to_json(const Structure& s, int indent = 2);

/// Parses the schema above.  Missing symmetric cells are filled by
/// commutativity; empty cells, unknown labels, missing cells, conflicting
/// symmetric entries and malformed negation maps are rejected with a
/// ParseError.  "kind" is optional and defaults to superring.
Structure structure_from_json(const std::string& text);

}  // namespace hyperforge
