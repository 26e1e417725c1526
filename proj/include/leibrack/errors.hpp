#pragma once

#include <stdexcept>
#include <string>

namespace leibrack {

enum class ErrorKind {
  Input,                 // malformed input, dimension or arity mismatch
  NotLeibniz,            // structure constants violate the left Leibniz identity
  Precondition,          // an operation's stated hypothesis does not hold
  InsufficientOrder,     // truncation order too small for the requested check
  NotInvariant,          // a form that must be invariant is not
  ShapeMismatch,         // series is not of the rigid sl2/so3 shape
  IsotropicProbe,        // no anisotropic probe vector could be found
  RecurrenceViolation,   // U-sequence fails the even recurrence
  EvenEquationResidual,  // recovered F-coefficients fail the even equations
  HypothesesFail,        // construction hypotheses fail on this algebra
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace leibrack
