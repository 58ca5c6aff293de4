#include "qschur/gf.hpp"

namespace qschur::gf {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on (a, p); p prime and a nonzero mod p.
  std::int64_t t = 0, newt = 1;
  std::int64_t r = p, newr = a % p;
  while (newr != 0) {
    const std::int64_t quot = r / newr;
    t -= quot * newt;
    std::swap(t, newt);
    r -= quot * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw PreconditionViolated("inv_mod of a non-unit");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Matrix Matrix::identity(std::uint32_t p, int n) {
  Matrix m(p, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_)
    throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(p_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const std::uint64_t v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        out(i, j) = static_cast<std::uint32_t>(
            (out(i, j) + v * rhs(k, j)) % p_);
      }
    }
  }
  return out;
}

int Matrix::rref() {
  int pivotRow = 0;
  for (int col = 0; col < cols_ && pivotRow < rows_; ++col) {
    int sel = -1;
    for (int i = pivotRow; i < rows_; ++i) {
      if ((*this)(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivotRow) {
      for (int j = 0; j < cols_; ++j)
        std::swap((*this)(sel, j), (*this)(pivotRow, j));
    }
    const std::uint64_t inv = inv_mod((*this)(pivotRow, col), p_);
    for (int j = col; j < cols_; ++j) {
      (*this)(pivotRow, j) =
          static_cast<std::uint32_t>((*this)(pivotRow, j) * inv % p_);
    }
    for (int i = 0; i < rows_; ++i) {
      if (i == pivotRow) continue;
      const std::uint64_t f = (*this)(i, col);
      if (f == 0) continue;
      for (int j = col; j < cols_; ++j) {
        const std::uint64_t sub = f * (*this)(pivotRow, j) % p_;
        (*this)(i, j) =
            static_cast<std::uint32_t>(((*this)(i, j) + p_ - sub) % p_);
      }
    }
    ++pivotRow;
  }
  return pivotRow;
}

void Matrix::trim_zero_rows() {
  int keep = rows_;
  while (keep > 0) {
    bool zero = true;
    for (int j = 0; j < cols_; ++j) {
      if ((*this)(keep - 1, j) != 0) {
        zero = false;
        break;
      }
    }
    if (!zero) break;
    --keep;
  }
  rows_ = keep;
  a_.resize(static_cast<std::size_t>(keep) * cols_);
}

std::vector<int> Matrix::pivot_columns() const {
  std::vector<int> pivots;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != 0) {
        pivots.push_back(j);
        break;
      }
    }
  }
  return pivots;
}

void Matrix::append_row(const std::uint32_t* src) {
  a_.insert(a_.end(), src, src + cols_);
  ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
  if (other.cols_ != cols_ || other.p_ != p_)
    throw DimensionMismatch("appended rows have wrong shape");
  a_.insert(a_.end(), other.a_.begin(), other.a_.end());
  rows_ += other.rows_;
}

int rank_of_stack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.prime() != b.prime())
    throw DimensionMismatch("stacked matrices have different shapes");
  const int cols = a.cols();
  const int rows = a.rows() + b.rows();
  const std::uint32_t p = a.prime();

  thread_local std::vector<std::uint32_t> scratch;
  scratch.assign(static_cast<std::size_t>(rows) * cols, 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < cols; ++j)
      scratch[static_cast<std::size_t>(i) * cols + j] = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < cols; ++j)
      scratch[static_cast<std::size_t>(a.rows() + i) * cols + j] = b(i, j);

  // Forward elimination only; the rank is all we need.
  auto at = [&](int i, int j) -> std::uint32_t& {
    return scratch[static_cast<std::size_t>(i) * cols + j];
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int sel = -1;
    for (int i = rank; i < rows; ++i) {
      if (at(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != rank)
      for (int j = col; j < cols; ++j) std::swap(at(sel, j), at(rank, j));
    const std::uint64_t inv = inv_mod(at(rank, col), p);
    for (int i = rank + 1; i < rows; ++i) {
      const std::uint64_t f = at(i, col) * inv % p;
      if (f == 0) continue;
      at(i, col) = 0;
      for (int j = col + 1; j < cols; ++j) {
        const std::uint64_t sub = f * at(rank, j) % p;
        at(i, j) = static_cast<std::uint32_t>((at(i, j) + p - sub) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace qschur::gf
