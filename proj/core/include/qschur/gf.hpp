#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur::gf {

/// Multiplicative inverse of a mod the prime p (0 < a < p).
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// Dense matrix over the prime field F_p.  Entries are reduced
/// representatives in [0, p).  Rows are vectors; a linear map with matrix M
/// sends the row v to v * M, so images of row spans are computed as
/// basis * M.  Indices here are 0-based (this is plumbing, not notation).
class Matrix {
 public:
  Matrix(std::uint32_t p, int rows, int cols)
      : p_(p), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static Matrix identity(std::uint32_t p, int n);

  std::uint32_t prime() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint32_t operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  std::uint32_t& operator()(int i, int j) {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const std::uint32_t* row(int i) const {
    return a_.data() + static_cast<std::size_t>(i) * cols_;
  }

  Matrix operator*(const Matrix& rhs) const;

  /// Gauss-Jordan elimination to reduced row echelon form; returns the rank.
  /// Zero rows sink to the bottom.
  int rref();
  /// Remove all-zero rows (meant for a matrix already in echelon form).
  void trim_zero_rows();
  /// Pivot columns of a matrix in reduced row echelon form.
  std::vector<int> pivot_columns() const;

  void append_row(const std::uint32_t* src);
  void append_rows(const Matrix& other);

  bool operator==(const Matrix&) const = default;
  auto operator<=>(const Matrix&) const = default;

 private:
  std::uint32_t p_;
  int rows_, cols_;
  std::vector<std::uint32_t> a_;
};

/// Rank of the stacked matrix [a; b].  Inputs are left untouched; scratch
/// space is reused per thread, so this is cheap in tight loops.
int rank_of_stack(const Matrix& a, const Matrix& b);

}  // namespace qschur::gf
