#pragma once

#include <stdexcept>
#include <string>

namespace vfbound {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, empty lists, bad parameters.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested quantity needs a representation the polytope does not carry.
class RepresentationUnavailable : public Error {
 public:
  using Error::Error;
};

/// The operation is deliberately not supported for this kind of input.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Iteration cap hit, or a result that contradicts a mathematical guarantee.
class SolverFailure : public Error {
 public:
  using Error::Error;
};

class InternalConsistency : public Error {
 public:
  using Error::Error;
};

/// Points or a linear map that fail to span the ambient space.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public SolverFailure {
 public:
  ConvergenceFailure(const std::string& what, double residual)
      : SolverFailure(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace vfbound
