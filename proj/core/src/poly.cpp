#include "qschur/poly.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace qschur {

using Rational = boost::multiprecision::cpp_rational;

IntPolynomial::IntPolynomial(long long constant) {
  if (constant != 0) c_.push_back(BigInt(constant));
}

IntPolynomial::IntPolynomial(BigInt constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

IntPolynomial IntPolynomial::variable() { return power(1); }

IntPolynomial IntPolynomial::power(int k) {
  IntPolynomial p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
  p.c_.back() = 1;
  return p;
}

IntPolynomial IntPolynomial::from_coefficients(std::vector<BigInt> ascending) {
  IntPolynomial p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

IntPolynomial IntPolynomial::gaussian_integer(int m) {
  IntPolynomial p;
  if (m > 0) p.c_.assign(static_cast<std::size_t>(m), BigInt(1));
  return p;
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return BigInt(0);
  return c_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), BigInt(0));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), BigInt(0));
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  IntPolynomial p;
  if (lhs.is_zero() || rhs.is_zero()) return p;
  p.c_.assign(lhs.c_.size() + rhs.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.c_.size(); ++i)
    for (std::size_t j = 0; j < rhs.c_.size(); ++j)
      p.c_[i + j] += lhs.c_[i] * rhs.c_[j];
  p.trim();
  return p;
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0 || a != 1) out << a.str();
    if (k > 0) {
      if (a != 1) out << "*";
      out << "q";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::vector<std::uint32_t> first_primes(std::size_t k) {
  std::vector<std::uint32_t> primes;
  primes.reserve(k);
  std::uint32_t candidate = 2;
  while (primes.size() < k) {
    bool prime = true;
    for (std::uint32_t d = 2; d * d <= candidate; ++d) {
      if (candidate % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
    ++candidate;
  }
  return primes;
}

IntPolynomial interpolate(const std::vector<PrimeSample>& samples,
                          int degree_bound) {
  if (degree_bound < 0) throw PreconditionViolated("negative degree bound");
  {
    std::set<std::uint32_t> distinct;
    for (const auto& s : samples) distinct.insert(s.prime);
    if (distinct.size() != samples.size())
      throw PreconditionViolated("interpolation nodes must be distinct");
    if (samples.size() < static_cast<std::size_t>(degree_bound) + 1)
      throw PreconditionViolated("too few samples for the degree bound");
  }

  // Newton form over exact rationals: after each node the accumulated
  // polynomial matches all samples seen so far.
  const std::size_t k = samples.size();
  std::vector<Rational> dd(k);  // divided differences, updated in place
  for (std::size_t i = 0; i < k; ++i) dd[i] = Rational(samples[i].value);
  std::vector<Rational> coeffs{dd[0]};
  std::vector<Rational> basis{Rational(1)};  // prod_{i<level} (x - x_i)
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) /
              Rational(static_cast<long long>(samples[i].prime) -
                       static_cast<long long>(samples[i - level].prime));
    }
    // basis *= (x - x_{level-1})
    basis.insert(basis.begin(), Rational(0));
    const Rational node(samples[level - 1].prime);
    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
      basis[i] -= node * basis[i + 1];
    if (coeffs.size() < basis.size()) coeffs.resize(basis.size(), Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
      coeffs[i] += dd[level] * basis[i];
  }

  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (static_cast<int>(coeffs.size()) - 1 > degree_bound)
    throw DegreeExceeded("interpolant degree " +
                         std::to_string(coeffs.size() - 1) +
                         " exceeds bound " + std::to_string(degree_bound));
  std::vector<BigInt> integral(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (denominator(coeffs[i]) != 1)
      throw NotIntegral("coefficient of q^" + std::to_string(i) +
                        " is not an integer");
    integral[i] = numerator(coeffs[i]);
  }
  return IntPolynomial::from_coefficients(std::move(integral));
}

}  // namespace qschur
