#pragma once

#include <stdexcept>

namespace qschur {

// Base type for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interpolation produced a coefficient that is not an integer.
struct NotIntegral : Error {
  using Error::Error;
};

// Interpolation data requires a degree above the stated bound.
struct DegreeExceeded : Error {
  using Error::Error;
};

// Linear-algebra operands live over different primes or ambient spaces.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Modules compared or combined with unequal dimension vectors.
struct DimVectorMismatch : Error {
  using Error::Error;
};

// A rank table that cannot arise from any module.
struct InconsistentRanks : Error {
  using Error::Error;
};

// Counting data failed the held-out validation prime, so it is not the
// specialization of a single polynomial of the predicted degree.
struct NotPolynomial : Error {
  using Error::Error;
};

// Two independent computation routes disagreed.
struct OracleDisagreement : Error {
  using Error::Error;
};

// An extension-support set came out empty.
struct EmptySupport : Error {
  using Error::Error;
};

// A minimum that should be unique is missing or ambiguous.
struct NotUnique : Error {
  using Error::Error;
};

// Diagonal bookkeeping of the generic product produced a negative entry.
struct NegativeDiagonal : Error {
  using Error::Error;
};

// Arguments violate a stated precondition.
struct PreconditionViolated : Error {
  using Error::Error;
};

// Verification suite name is not recognized.
struct UnknownSuite : Error {
  using Error::Error;
};

}  // namespace qschur
