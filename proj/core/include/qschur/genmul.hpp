#pragma once

#include <optional>
#include <string>

#include "qschur/hall.hpp"
#include "qschur/matrix_index.hpp"
#include "qschur/quivermod.hpp"
#include "qschur/schur.hpp"

namespace qschur {

/// Result of the generic multiplication: one basis index, or the absorbing
/// zero.  Zero is an explicit value, never an empty element, so product
/// tables stay total functions.
class GenericProduct {
 public:
  static GenericProduct zero() { return GenericProduct(); }
  static GenericProduct of(MatrixIndex a) {
    GenericProduct p;
    p.a_ = std::move(a);
    return p;
  }

  bool is_zero() const { return !a_.has_value(); }
  const MatrixIndex& matrix() const;

  bool operator==(const GenericProduct&) const = default;

  std::string str() const;

 private:
  GenericProduct() = default;
  std::optional<MatrixIndex> a_;
};

/// e_A o e_A2 for upper triangular A, A2 with equal entry sums: zero when
/// co(A) != ro(A2); otherwise the strict upper parts name two module
/// classes M, N, and the product index is the generic extension M * N
/// completed by the diagonal that restores the row sums of A.  The margins
/// always work out (the result reproduces ro(A) and co(A2)); a violation
/// throws NegativeDiagonal, which signals a bug, never an input error.
GenericProduct generic_multiply(const MatrixIndex& A, const MatrixIndex& A2,
                                HallAlgebra& hall);

/// Independent route to the same product: take the full polynomial
/// multiplication, and pick the support element whose strict upper part is
/// the minimum of the degeneration order.  Throws NotUnique when no single
/// minimum exists.  Desk-scale only; used to cross-check generic_multiply.
GenericProduct generic_multiply_oracle(const MatrixIndex& A,
                                       const MatrixIndex& A2,
                                       SchurAlgebra& schur);

/// theta: the module-to-Schur map sending a class M to l_{M,r}, zero when
/// the summand count exceeds r.
SchurElement theta(const Multisegment& M, int r);

/// Gamma: the induced map on the monoid algebra; pointwise equal to theta
/// (named separately because the verification suites quote both).
SchurElement gamma(const Multisegment& M, int r);

}  // namespace qschur
