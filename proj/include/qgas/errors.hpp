#pragma once

#include <stdexcept>
#include <string>

namespace qgas {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the physical or mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Quadrature could not reach its tolerance within the subdivision budget.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// Root bracketing or refinement failed.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class NoSolutionError : public Error {
 public:
  using Error::Error;
};

/// The trap geometry does not admit Bose-Einstein condensation.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgas
