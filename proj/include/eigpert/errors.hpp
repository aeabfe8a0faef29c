#pragma once

#include <stdexcept>
#include <string>

namespace eigpert {

/// Caller supplied something outside an operation's preconditions
/// (dimension mismatch, zero divisor, malformed file, unmet hypothesis).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A proved inequality or identity failed on a concrete instance. This is
/// never an input problem: it means the exact kernels are wrong somewhere.
class VerificationViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eigpert
