#pragma once

#include <stdexcept>
#include <string>

namespace quadmaps {

/// A mathematical precondition failed (degenerate map, singular matrix,
/// invalid triple, non-integral reduction, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal cross-check of a verification report failed.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quadmaps
