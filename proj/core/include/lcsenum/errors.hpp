#pragma once

#include <stdexcept>
#include <string>

namespace lcsenum {

// Caller passed arguments outside a documented precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal state is inconsistent (e.g. a position sequence that does not
// embed into X was handed to the branch finder).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The quadratic-space oracle refused an input above its size guard.
class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace lcsenum
