#pragma once

#include <stdexcept>
#include <string>

namespace modq {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mixing scalars or tensors from different rings.
struct RingMismatchError : Error {
  using Error::Error;
};

/// A modulus (or other argument) that was required to be prime is not.
struct NotPrimeError : Error {
  using Error::Error;
};

/// A label not present in the relevant variable set.
struct UnknownLabelError : Error {
  using Error::Error;
};

/// A configurable size cap (tensor power, oracle input) was exceeded.
struct SizeCapError : Error {
  using Error::Error;
};

/// Operation on the zero polynomial that requires a nonzero one.
struct ZeroPolynomialError : Error {
  using Error::Error;
};

/// Exact arithmetic would leave the ring (e.g. inexact division).
struct ExactnessError : Error {
  using Error::Error;
};

/// A triple set or zeroing that was required to be independent is not.
struct NotIndependentError : Error {
  using Error::Error;
};

/// Border-rank grading violated: a nonzero coefficient below the designated order.
struct BorderOrderError : Error {
  BorderOrderError(const std::string& msg, int degree) : Error(msg), offending_degree(degree) {}
  int offending_degree;
};

/// Precondition failure (ranges, divisibility, malformed input).
struct InvalidArgumentError : Error {
  using Error::Error;
};

}  // namespace modq
