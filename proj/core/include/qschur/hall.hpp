#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include "qschur/poly.hpp"
#include "qschur/quivermod.hpp"

namespace qschur {

/// Element of the Hall algebra: finite sum of module classes with
/// polynomial coefficients.  Zero coefficients are never stored.
using HallElement = std::map<Multisegment, IntPolynomial>;

/// Hall numbers by submodule counting over prime fields, Hall polynomials
/// by interpolation in the field size, the Hall product, and the generic
/// extension monoid.  Counting results are memoized per (module, prime):
/// one pass over the submodules of a realization buckets every
/// (quotient class, submodule class) pair at once, so all Hall numbers
/// with the same extension module share the work.  Safe for concurrent
/// callers; all results are deterministic.
class HallAlgebra {
 public:
  HallAlgebra() = default;

  /// F^X_{M,N} at field size p: the number of submodules U of a
  /// realization of X with U isomorphic to N and X/U isomorphic to M.
  /// Throws DimVectorMismatch unless dim(X) = dim(M) + dim(N).
  std::uint64_t hall_number(const Multisegment& X, const Multisegment& M,
                            const Multisegment& N, std::uint32_t p);

  /// F^X_{M,N} as a polynomial in the field size: counted at
  /// degree_bound + 1 primes and interpolated, where degree_bound is the
  /// ambient product-of-Grassmannians dimension sum_l n_l (x_l - n_l),
  /// then validated at one extra prime.  Throws NotPolynomial if the
  /// validation prime disagrees with the interpolant.
  IntPolynomial hall_polynomial(const Multisegment& X, const Multisegment& M,
                                const Multisegment& N);

  /// The Hall product M N = sum over X of F^X_{M,N} X, over all X with the
  /// matching dimension vector.
  HallElement hall_product(const Multisegment& M, const Multisegment& N);

  /// The generic extension M * N: the dense point of the variety of
  /// extensions with sub N and quotient M, equivalently the unique minimum
  /// of the Hall product support in the degeneration order.  Computed
  /// combinatorially from composite rank functions: that variety is a
  /// plain vector space of connecting maps, hence irreducible, so one
  /// generic point maximizes every composite rank at once, and folding the
  /// sub factor in one interval at a time (latest start first, an order in
  /// which the intervals reassemble N) tracks those maxima in closed form.
  /// Cost is polynomial in n, independent of the dimension.
  Multisegment generic_extension(const Multisegment& M, const Multisegment& N);

  /// Independent route to the generic extension, kept as an oracle: take
  /// the support of the Hall product, select the unique degeneration-order
  /// minimum, and cross-check it against the unique minimizer of
  /// dim End(X) over the support (the dense orbit has maximal orbit
  /// dimension, and orbit dimension is dim GL - dim End).
  /// Throws OracleDisagreement if the two characterizations differ and
  /// EmptySupport if the support is empty (impossible: the split extension
  /// always contributes).  Exponential in the dimension; small inputs only.
  Multisegment generic_extension_from_hall(const Multisegment& M,
                                           const Multisegment& N);

 private:
  using IsoPair = std::pair<Multisegment, Multisegment>;  // (quotient, sub)
  using Histogram = std::map<IsoPair, std::uint64_t>;

  const Histogram& histogram(const Multisegment& X, std::uint32_t p);

  std::map<std::pair<Multisegment, std::uint32_t>, Histogram> histograms_;
  std::map<std::tuple<Multisegment, Multisegment, Multisegment>, IntPolynomial>
      polynomials_;
  std::map<std::pair<Multisegment, Multisegment>, Multisegment> extensions_;
  std::mutex mutex_;
};

}  // namespace qschur
