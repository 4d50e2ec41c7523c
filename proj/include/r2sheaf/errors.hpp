#pragma once

#include <stdexcept>
#include <string>

namespace r2sheaf {

// Malformed or out-of-domain arguments (CLI exit code 1).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inputs that are well-formed but mathematically inconsistent, e.g. a negative
// c3 or a contradiction found by the inference engine (CLI exit code 2).
class InconsistentData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside the hypotheses it is stated for.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two independent evaluation routes disagreed (CLI exit code 3).
class IdentityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace r2sheaf
