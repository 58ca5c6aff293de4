#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in one variable q with arbitrary-precision integer
/// coefficients.  Coefficients are stored in ascending degree and kept
/// canonical: no trailing zero coefficients, so the zero polynomial has an
/// empty coefficient vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long long constant);  // NOLINT: implicit by design
  explicit IntPolynomial(BigInt constant);

  /// The monomial q.
  static IntPolynomial variable();
  /// q^k.
  static IntPolynomial power(int k);
  /// Coefficients in ascending degree; trailing zeros are trimmed.
  static IntPolynomial from_coefficients(std::vector<BigInt> ascending);
  /// [m]_q = 1 + q + ... + q^{m-1}; [0]_q = 0.
  static IntPolynomial gaussian_integer(int m);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of q^k, zero outside the stored range.
  BigInt coefficient(int k) const;
  const std::vector<BigInt>& coefficients() const { return c_; }

  /// Exact evaluation.
  BigInt operator()(const BigInt& x) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend IntPolynomial operator*(const IntPolynomial& lhs,
                                 const IntPolynomial& rhs);

  bool operator==(const IntPolynomial&) const = default;

  /// Human-readable form, e.g. "q^2 + 3*q + 1"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// First k primes in ascending order: 2, 3, 5, ...
std::vector<std::uint32_t> first_primes(std::size_t k);

/// One evaluation of an integer counting function at a prime.
struct PrimeSample {
  std::uint32_t prime = 0;
  std::uint64_t value = 0;
};

/// The unique polynomial of degree <= degree_bound passing through the
/// samples, computed with exact rational arithmetic and then certified to
/// have integer coefficients.
///
/// pre:  samples holds at least degree_bound + 1 pairwise distinct primes.
/// Throws DegreeExceeded when the data needs degree > degree_bound,
/// NotIntegral when some coefficient of the interpolant is not an integer,
/// and PreconditionViolated on malformed samples.
IntPolynomial interpolate(const std::vector<PrimeSample>& samples,
                          int degree_bound);

}  // namespace qschur
