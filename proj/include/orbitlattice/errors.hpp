#pragma once

#include <stdexcept>
#include <string>

namespace orbitlattice {

// An input broke a documented precondition or type invariant (bad tableau
// columns, matrix outside the realizable set, size mismatch, cap exceeded).
// The CLI maps this to exit code 1.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text input could not be parsed at all (malformed cycle list, matrix syntax,
// unknown enum value).  The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace orbitlattice
