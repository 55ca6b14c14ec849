#pragma once

#include <stdexcept>

namespace galdef {

// Error taxonomy shared by the library and the command-line tool.
// The CLI maps these onto its exit-code contract:
//   ParseError -> 1, HypothesisError -> 2, SizeLimitError -> 3.

// Malformed input: group spec strings, instance files, cocycle tables.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is well-formed but violates a mathematical precondition
// (degenerate cocycle, non-normal subgroup where normality is required, ...).
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured size cap was exceeded (group order, lattice size).
struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two routes that must agree by theorem disagreed: an implementation bug,
// never a consequence of bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace galdef
