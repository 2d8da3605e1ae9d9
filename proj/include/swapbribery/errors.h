#ifndef SWAPBRIBERY_ERRORS_H_
#define SWAPBRIBERY_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swapbribery {

// Root of every error thrown by the library. The CLI maps each subclass to a
// distinct exit code.
class BriberyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input: malformed votes, rule parameters out of range, bad prices.
class ParameterError : public BriberyError {
 public:
  using BriberyError::BriberyError;
};

class ParseError : public ParameterError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : ParameterError("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A unit swap that was not adjacent at the moment it was executed.
class AdmissibilityError : public BriberyError {
 public:
  AdmissibilityError(std::size_t step, const std::string& message)
      : BriberyError("step " + std::to_string(step) + ": " + message),
        step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

class RangeError : public BriberyError {
 public:
  using BriberyError::BriberyError;
};

class OverflowError : public BriberyError {
 public:
  using BriberyError::BriberyError;
};

// The requested transformation requires a forbidden swap or cannot be
// realized at any finite cost.
class InfeasibleError : public BriberyError {
 public:
  using BriberyError::BriberyError;
};

// A desk-scale enumeration would exceed its configured limit.
class CapacityError : public BriberyError {
 public:
  using BriberyError::BriberyError;
};

// A solver produced something that does not replay. Always a bug.
class ConsistencyError : public BriberyError {
 public:
  using BriberyError::BriberyError;
};

}  // namespace swapbribery

#endif  // SWAPBRIBERY_ERRORS_H_
