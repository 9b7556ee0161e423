#pragma once

#include <stdexcept>
#include <string>

namespace rotavg {

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured size limit (rank, enumeration size).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two exact evaluation routes disagreed structurally, e.g. powers of pi
/// failed to cancel. Always a bug, never an input problem.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rotavg
