#ifndef FORMAL_RINGS_ERRORS_HPP
#define FORMAL_RINGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace formal_rings {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& what) : Error("ring mismatch: " + what) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DivisionNotExact : public Error {
 public:
  explicit DivisionNotExact(const std::string& what) : Error("division not exact: " + what) {}
};

class UnassignedParameter : public Error {
 public:
  explicit UnassignedParameter(const std::string& name)
      : Error("unassigned parameter '" + name + "'") {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error("shape mismatch: " + what) {}
};

class NonzeroConstantTerm : public Error {
 public:
  explicit NonzeroConstantTerm(const std::string& what)
      : Error("nonzero constant term: " + what) {}
};

class SingularLinearPart : public Error {
 public:
  explicit SingularLinearPart(const std::string& what) : Error("linear part " + what) {}
};

class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what) : Error("precision: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& what) : Error("no convergence: " + what) {}
};

}  // namespace formal_rings

#endif  // FORMAL_RINGS_ERRORS_HPP
