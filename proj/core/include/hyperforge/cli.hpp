#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperforge/structure.hpp"

namespace hyperforge {
namespace cli {

/// Resolves "catalog:<name>" or a file path (structure JSON schema).
/// With verify, the declared kind's axiom suite is run on load and a failure
/// throws VerificationError carrying the witness report.
struct VerificationError : std::runtime_error {
  Report report;
  VerificationError(std::string what, Report rep)
      : std::runtime_error(std::move(what)), report(std::move(rep)) {}
};

Structure load_structure(const std::string& ref, bool verify = true);

/// Entry point used by the binary and by tests.  argv excludes the program
/// name.  Exit codes: 0 success, 1 mathematical violation found,
/// 2 usage/input/budget error.  All reports are emitted as deterministic
/// JSON to `out` when --json is given (byte-identical across reruns for
/// identical inputs and seeds); the human rendering, including wall time,
/// goes to `out` otherwise.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace hyperforge
