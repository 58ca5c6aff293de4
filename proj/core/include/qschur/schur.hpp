#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qschur/gfcount.hpp"
#include "qschur/matrix_index.hpp"
#include "qschur/poly.hpp"
#include "qschur/quivermod.hpp"

namespace qschur {

/// Element of the q-Schur algebra S_q(n, r): finite sum of basis elements
/// e_A with polynomial coefficients.  Zero coefficients are never stored,
/// so structural equality is algebra equality.
class SchurElement {
 public:
  SchurElement() = default;
  /// The basis element e_A with coefficient 1.
  static SchurElement basis(const MatrixIndex& A);

  bool is_zero() const { return terms_.empty(); }
  const std::map<MatrixIndex, IntPolynomial>& terms() const { return terms_; }

  /// Adds c * e_A, dropping the term if the sum cancels.
  void add_term(const MatrixIndex& A, const IntPolynomial& c);

  SchurElement& operator+=(const SchurElement& rhs);
  SchurElement& operator-=(const SchurElement& rhs);
  friend SchurElement operator+(SchurElement lhs, const SchurElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend SchurElement operator-(SchurElement lhs, const SchurElement& rhs) {
    lhs -= rhs;
    return lhs;
  }
  /// Coefficient-wise product with a polynomial scalar.
  SchurElement scaled(const IntPolynomial& c) const;

  bool operator==(const SchurElement&) const = default;

  std::string str() const;

 private:
  std::map<MatrixIndex, IntPolynomial> terms_;
};

/// Coefficient-wise evaluation at q = 0, dropping vanished terms.
SchurElement specialize0(const SchurElement& x);

/// l_{S,r}: the sum of e_{S+D} over all diagonal matrices D whose trace
/// tops the multiplicity sum of S up to r.  The zero element when that sum
/// exceeds r.
SchurElement l_element(const Multisegment& S, int r);

/// The Chevalley generator E_i = l of the simple class at vertex i.
SchurElement e_generator(int n, int i, int r);

/// The unit: sum of e_D over all diagonal D of trace r.
SchurElement unit_element(int n, int r);

struct SchurOptions {
  /// Explicit prime pool for counting; empty means the smallest primes are
  /// taken as needed.  When given, it must be long enough for the degree
  /// bound of every requested product plus one validation prime.
  std::vector<std::uint32_t> primes;
  /// Directory for the persistent structure-constant cache; empty disables
  /// disk caching.  One JSON document per (n, r).
  std::string cache_dir;
  /// Worker threads for multiply; 0 resolves via QSCHUR_JOBS.
  int jobs = 1;
};

/// The q-Schur algebra S_q(n, r) with exact structure constants.
///
/// multiply() counts intermediate flags over prime fields and interpolates
/// the counts into polynomials in q, validating each at one extra prime.
/// Enumerated flags and per-candidate position tallies are memoized and
/// shared across products, as are finished products (in memory and
/// optionally on disk).  All public methods are safe to call concurrently;
/// results are deterministic.
class SchurAlgebra {
 public:
  SchurAlgebra(int n, int r, SchurOptions options = {});
  ~SchurAlgebra();

  int n() const { return n_; }
  int r() const { return r_; }

  /// e_A * e_A2 as an exact polynomial combination; the zero element when
  /// co(A) != ro(A2).
  SchurElement multiply(const MatrixIndex& A, const MatrixIndex& A2);
  /// Bilinear extension.
  SchurElement multiply(const SchurElement& x, const SchurElement& y);

  /// Closed form for e_B * e_A when B minus a single unit entry at
  /// (h, h+1) is diagonal: a sum over the column positions p with
  /// a_{h+1,p} > 0 of q-power times Gaussian-integer multiples of basis
  /// elements.  Requires co(B) = ro(A).
  SchurElement chevalley_left(const MatrixIndex& B, const MatrixIndex& A) const;
  /// Closed form for e_A * e_B with B as above and co(A) = ro(B), obtained
  /// from the left form through the antitranspose symmetry
  /// (reverse both index orders and transpose), which reverses products
  /// and carries the one-unit-above-diagonal shape to itself.
  SchurElement chevalley_right(const MatrixIndex& A, const MatrixIndex& B) const;

  /// E_i * x through the left closed form, term by term (margin-mismatched
  /// pairs contribute zero).
  SchurElement generator_times(int i, const SchurElement& x) const;
  /// x * E_i through the right closed form.
  SchurElement times_generator(const SchurElement& x, int i) const;

  SchurElement l_element(const Multisegment& S) const {
    return qschur::l_element(S, r_);
  }
  SchurElement e_generator(int i) const {
    return qschur::e_generator(n_, i, r_);
  }
  SchurElement unit() const { return unit_element(n_, r_); }

  /// Writes the disk cache if it changed; called by the destructor too.
  void flush_cache();

 private:
  using Tally = std::map<std::pair<MatrixIndex, MatrixIndex>, std::uint64_t>;

  const std::vector<FlagChain>& flags(const std::vector<int>& type,
                                      std::uint32_t p);
  const Tally& tally(const MatrixIndex& candidate,
                     const std::vector<int>& middle_type, std::uint32_t p);
  std::vector<std::uint32_t> prime_pool(int count) const;
  SchurElement compute_product(const MatrixIndex& A, const MatrixIndex& A2);
  void load_disk_cache();
  std::string cache_file() const;

  int n_, r_;
  SchurOptions options_;

  std::map<std::pair<std::vector<int>, std::uint32_t>, std::vector<FlagChain>>
      flags_;
  std::map<std::tuple<MatrixIndex, std::vector<int>, std::uint32_t>, Tally>
      tallies_;
  std::map<std::pair<MatrixIndex, MatrixIndex>, SchurElement> products_;
  std::map<std::string, SchurElement> disk_;
  bool disk_loaded_ = false;
  bool disk_dirty_ = false;
  std::mutex mutex_;
};

}  // namespace qschur
