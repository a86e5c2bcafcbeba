#pragma once

#include <stdexcept>
#include <string>

namespace zdim {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Violated precondition or invalid input (CLI exit code 2).
struct PreconditionError : Error {
  using Error::Error;
};

/// Numerical failure during an otherwise valid computation (CLI exit code 3).
struct NumericalError : Error {
  using Error::Error;
};

struct InvalidArgument final : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct InvalidInterval final : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct AtPole final : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct OutsideConvergence final : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct NotImplementedRegion final : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct DegenerateConnection final : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct NotGraded final : PreconditionError {
  using PreconditionError::PreconditionError;
};
struct UnsupportedSpectrum final : PreconditionError {
  using PreconditionError::PreconditionError;
};

struct NonConvergent final : NumericalError {
  using NumericalError::NumericalError;
};
struct PoleTooClose final : NumericalError {
  using NumericalError::NumericalError;
};
struct Inconsistent final : NumericalError {
  using NumericalError::NumericalError;
};
struct IdentityViolated final : NumericalError {
  using NumericalError::NumericalError;
};
struct NotUnitary final : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace zdim
