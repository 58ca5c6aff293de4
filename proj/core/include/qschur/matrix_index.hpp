#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

/// Square matrix of natural numbers.  A matrix whose entries sum to r labels
/// a basis element e_A of the q-Schur algebra S_q(n, r); row sums and column
/// sums record the step types of the two flags in relative position A.
/// Indices are 1-based, matching the usual notation a_{ij}.
class MatrixIndex {
 public:
  explicit MatrixIndex(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0) {}

  static MatrixIndex diagonal(const std::vector<int>& d);
  /// E_{ij}: single unit entry in row i, column j.
  static MatrixIndex elementary(int n, int i, int j);

  int n() const { return n_; }
  /// Sum of all entries (the weight r).
  int sum() const;

  int at(int i, int j) const { return e_[idx(i, j)]; }
  void set(int i, int j, int v);
  void add_at(int i, int j, int delta);

  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;

  bool is_diagonal() const;
  bool is_upper_triangular() const;
  bool is_strictly_upper_triangular() const;

  MatrixIndex transposed() const;
  /// Both index orders reversed: entry (i, j) of the result is
  /// entry (n+1-i, n+1-j) of the input.
  MatrixIndex reversed() const;
  /// Transpose across the antidiagonal: reversed transpose.  An involution.
  MatrixIndex antitransposed() const { return transposed().reversed(); }
  /// Diagonal and lower entries zeroed.
  MatrixIndex strict_upper_part() const;

  MatrixIndex operator+(const MatrixIndex& rhs) const;

  bool operator==(const MatrixIndex&) const = default;
  auto operator<=>(const MatrixIndex&) const = default;

  /// Compact row-major form, e.g. "[[1,1],[0,0]]".
  std::string str() const;

 private:
  std::size_t idx(int i, int j) const;
  int n_;
  std::vector<int> e_;  // row-major
};

/// Row sums of A (the type of the first flag of a pair in position A).
std::vector<int> ro(const MatrixIndex& A);
/// Column sums of A (the type of the second flag).
std::vector<int> co(const MatrixIndex& A);

/// All ways to write total as an ordered sum of `parts` naturals,
/// lexicographically.
std::vector<std::vector<int>> compositions(int total, int parts);

/// The set D_s: diagonal n-by-n matrices with entry sum s.
std::vector<MatrixIndex> diagonal_matrices(int n, int s);

/// All matrices of naturals with the given row and column sums, in
/// lexicographic row-major order.  Empty when the sums disagree.
std::vector<MatrixIndex> matrices_with_margins(const std::vector<int>& rows,
                                               const std::vector<int>& cols);

/// All n-by-n matrices of naturals with entry sum r (the index set of the
/// e_A basis), lexicographically.
std::vector<MatrixIndex> all_matrices(int n, int r);

/// Upper-triangular members of all_matrices(n, r).
std::vector<MatrixIndex> upper_triangular_matrices(int n, int r);

/// Strictly upper-triangular n-by-n matrices of naturals with entry sum s.
std::vector<MatrixIndex> strictly_upper_matrices(int n, int s);

}  // namespace qschur
