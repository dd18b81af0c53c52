#pragma once

#include <stdexcept>
#include <string>

namespace jetdiff {

/// Precondition on (n, k, weights, ...) not met.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed polynomial or partition text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A resource ceiling (term count, exponent width, enumeration size) was hit.
/// Raised instead of returning a truncated result.
class ComputationTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jetdiff
