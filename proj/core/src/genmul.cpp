#include "qschur/genmul.hpp"

#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

const MatrixIndex& GenericProduct::matrix() const {
  if (!a_) throw PreconditionViolated("zero product has no index");
  return *a_;
}

std::string GenericProduct::str() const {
  return a_ ? a_->str() : "zero";
}

namespace {

void require_upper_pair(const MatrixIndex& A, const MatrixIndex& A2) {
  if (A.n() != A2.n() || A.sum() != A2.sum())
    throw PreconditionViolated("factors must share n and entry sum");
  if (!A.is_upper_triangular() || !A2.is_upper_triangular())
    throw PreconditionViolated("generic product needs upper triangular factors");
}

}  // namespace

GenericProduct generic_multiply(const MatrixIndex& A, const MatrixIndex& A2,
                                HallAlgebra& hall) {
  require_upper_pair(A, A2);
  if (co(A) != ro(A2)) return GenericProduct::zero();
  const Multisegment M = Multisegment::from_matrix(A.strict_upper_part());
  const Multisegment N = Multisegment::from_matrix(A2.strict_upper_part());
  const Multisegment X = hall.generic_extension(M, N);
  const std::vector<int> rows = ro(A);
  const std::vector<int> have = X.matrix().row_sums();
  std::vector<int> d(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    d[i] = rows[i] - have[i];
    if (d[i] < 0)
      throw NegativeDiagonal("row sums of the generic extension exceed ro(A)");
  }
  const MatrixIndex result = X.matrix() + MatrixIndex::diagonal(d);
  if (co(result) != co(A2))
    throw NegativeDiagonal(
        "generic product failed the column sum bookkeeping assertion");
  return GenericProduct::of(result);
}

GenericProduct generic_multiply_oracle(const MatrixIndex& A,
                                       const MatrixIndex& A2,
                                       SchurAlgebra& schur) {
  require_upper_pair(A, A2);
  const SchurElement product = schur.multiply(A, A2);
  if (product.is_zero()) return GenericProduct::zero();
  std::vector<MatrixIndex> support;
  for (const auto& [key, coeff] : product.terms()) support.push_back(key);
  std::vector<MatrixIndex> minima;
  for (const MatrixIndex& X : support) {
    const Multisegment mx = Multisegment::from_matrix(X.strict_upper_part());
    bool least = true;
    for (const MatrixIndex& Y : support)
      if (!deg_leq(mx, Multisegment::from_matrix(Y.strict_upper_part()))) {
        least = false;
        break;
      }
    if (least) minima.push_back(X);
  }
  if (minima.size() != 1)
    throw NotUnique("support of " + A.str() + " * " + A2.str() +
                    " has no unique degeneration minimum");
  return GenericProduct::of(minima[0]);
}

SchurElement theta(const Multisegment& M, int r) { return l_element(M, r); }

SchurElement gamma(const Multisegment& M, int r) { return theta(M, r); }

}  // namespace qschur
