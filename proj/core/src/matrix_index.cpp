#include "qschur/matrix_index.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace qschur {

std::size_t MatrixIndex::idx(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw PreconditionViolated("matrix index out of range");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

MatrixIndex MatrixIndex::diagonal(const std::vector<int>& d) {
  MatrixIndex m(static_cast<int>(d.size()));
  for (int i = 1; i <= m.n_; ++i) m.set(i, i, d[static_cast<std::size_t>(i - 1)]);
  return m;
}

MatrixIndex MatrixIndex::elementary(int n, int i, int j) {
  MatrixIndex m(n);
  m.set(i, j, 1);
  return m;
}

int MatrixIndex::sum() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

void MatrixIndex::set(int i, int j, int v) {
  if (v < 0) throw PreconditionViolated("matrix entries are naturals");
  e_[idx(i, j)] = v;
}

void MatrixIndex::add_at(int i, int j, int delta) {
  int& cell = e_[idx(i, j)];
  if (cell + delta < 0)
    throw PreconditionViolated("matrix entries are naturals");
  cell += delta;
}

std::vector<int> MatrixIndex::row_sums() const {
  std::vector<int> s(static_cast<std::size_t>(n_), 0);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) s[static_cast<std::size_t>(i - 1)] += at(i, j);
  return s;
}

std::vector<int> MatrixIndex::col_sums() const {
  std::vector<int> s(static_cast<std::size_t>(n_), 0);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) s[static_cast<std::size_t>(j - 1)] += at(i, j);
  return s;
}

bool MatrixIndex::is_diagonal() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

bool MatrixIndex::is_upper_triangular() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j < i; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

bool MatrixIndex::is_strictly_upper_triangular() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= i; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

MatrixIndex MatrixIndex::transposed() const {
  MatrixIndex m(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) m.set(j, i, at(i, j));
  return m;
}

MatrixIndex MatrixIndex::reversed() const {
  MatrixIndex m(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) m.set(n_ + 1 - i, n_ + 1 - j, at(i, j));
  return m;
}

MatrixIndex MatrixIndex::strict_upper_part() const {
  MatrixIndex m(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) m.set(i, j, at(i, j));
  return m;
}

MatrixIndex MatrixIndex::operator+(const MatrixIndex& rhs) const {
  if (n_ != rhs.n_) throw DimensionMismatch("matrix sizes differ");
  MatrixIndex m(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) m.set(i, j, at(i, j) + rhs.at(i, j));
  return m;
}

std::string MatrixIndex::str() const {
  std::ostringstream out;
  out << "[";
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out << ",";
    out << "[";
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) out << ",";
      out << at(i, j);
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

std::vector<int> ro(const MatrixIndex& A) { return A.row_sums(); }
std::vector<int> co(const MatrixIndex& A) { return A.col_sums(); }

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == parts - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, remaining - v);
    }
  };
  if (total >= 0) rec(0, total);
  return out;
}

std::vector<MatrixIndex> diagonal_matrices(int n, int s) {
  std::vector<MatrixIndex> out;
  for (const auto& c : compositions(s, n)) out.push_back(MatrixIndex::diagonal(c));
  return out;
}

namespace {

// Matrices with prescribed entry positions (row-major order) and total sum,
// filtered by row/column margins when given.
void fill_cells(const std::vector<std::pair<int, int>>& cells, int n, int total,
                std::vector<MatrixIndex>& out) {
  MatrixIndex cur(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos,
                                                  int remaining) {
    if (pos == cells.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    if (pos + 1 == cells.size()) {
      cur.set(cells[pos].first, cells[pos].second, remaining);
      out.push_back(cur);
      cur.set(cells[pos].first, cells[pos].second, 0);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur.set(cells[pos].first, cells[pos].second, v);
      rec(pos + 1, remaining - v);
    }
    cur.set(cells[pos].first, cells[pos].second, 0);
  };
  if (cells.empty()) {
    if (total == 0) out.push_back(cur);
    return;
  }
  rec(0, total);
}

}  // namespace

std::vector<MatrixIndex> matrices_with_margins(const std::vector<int>& rows,
                                               const std::vector<int>& cols) {
  std::vector<MatrixIndex> out;
  const int n = static_cast<int>(rows.size());
  if (static_cast<int>(cols.size()) != n) return out;
  if (std::accumulate(rows.begin(), rows.end(), 0) !=
      std::accumulate(cols.begin(), cols.end(), 0))
    return out;

  MatrixIndex cur(n);
  std::vector<int> colLeft = cols;
  // Row by row: each row is a composition of its margin constrained by the
  // remaining column budgets.
  std::function<void(int)> recRow = [&](int i) {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    std::function<void(int, int)> recCell = [&](int j, int remaining) {
      if (j == n) {
        if (remaining <= colLeft[static_cast<std::size_t>(j - 1)]) {
          cur.set(i, j, remaining);
          colLeft[static_cast<std::size_t>(j - 1)] -= remaining;
          recRow(i + 1);
          colLeft[static_cast<std::size_t>(j - 1)] += remaining;
          cur.set(i, j, 0);
        }
        return;
      }
      const int cap = std::min(remaining, colLeft[static_cast<std::size_t>(j - 1)]);
      for (int v = 0; v <= cap; ++v) {
        cur.set(i, j, v);
        colLeft[static_cast<std::size_t>(j - 1)] -= v;
        recCell(j + 1, remaining - v);
        colLeft[static_cast<std::size_t>(j - 1)] += v;
      }
      cur.set(i, j, 0);
    };
    recCell(1, rows[static_cast<std::size_t>(i - 1)]);
  };
  recRow(1);
  return out;
}

std::vector<MatrixIndex> all_matrices(int n, int r) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) cells.emplace_back(i, j);
  std::vector<MatrixIndex> out;
  fill_cells(cells, n, r, out);
  return out;
}

std::vector<MatrixIndex> upper_triangular_matrices(int n, int r) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) cells.emplace_back(i, j);
  std::vector<MatrixIndex> out;
  fill_cells(cells, n, r, out);
  return out;
}

std::vector<MatrixIndex> strictly_upper_matrices(int n, int s) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) cells.emplace_back(i, j);
  std::vector<MatrixIndex> out;
  fill_cells(cells, n, s, out);
  return out;
}

}  // namespace qschur
