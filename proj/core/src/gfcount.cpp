#include "qschur/gfcount.hpp"

#include <algorithm>
#include <numeric>

#include "qschur/errors.hpp"

namespace qschur {

namespace {

std::uint64_t u64_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

/// Visits every strictly increasing k-subset of {0, ..., m-1} in
/// lexicographic order.
void for_each_combination(int m, int k,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 0 || k > m) return;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    visit(c);
    int t = k - 1;
    while (t >= 0 && c[t] == m - k + t) --t;
    if (t < 0) return;
    ++c[t];
    for (int s = t + 1; s < k; ++s) c[s] = c[s - 1] + 1;
  }
}

/// Free coordinates of a reduced echelon matrix with the given pivot
/// columns: entry (t, j) is free iff j lies right of pivot t and is not a
/// pivot column itself.
std::vector<std::pair<int, int>> free_positions(const std::vector<int>& pivots,
                                                int ambient) {
  std::vector<std::pair<int, int>> pos;
  for (int t = 0; t < static_cast<int>(pivots.size()); ++t)
    for (int j = pivots[t] + 1; j < ambient; ++j)
      if (!std::binary_search(pivots.begin(), pivots.end(), j))
        pos.emplace_back(t, j);
  return pos;
}

}  // namespace

Subspace Subspace::zero(std::uint32_t p, int ambient) {
  return Subspace(gf::Matrix(p, 0, ambient));
}

Subspace Subspace::full(std::uint32_t p, int ambient) {
  return Subspace(gf::Matrix::identity(p, ambient));
}

Subspace Subspace::row_span(gf::Matrix rows) {
  rows.rref();
  rows.trim_zero_rows();
  return Subspace(std::move(rows));
}

Subspace Subspace::coordinate(std::uint32_t p, int ambient,
                              const std::vector<int>& indices) {
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  gf::Matrix m(p, static_cast<int>(sorted.size()), ambient);
  for (int t = 0; t < static_cast<int>(sorted.size()); ++t) {
    int j = sorted[t];
    if (j < 0 || j >= ambient || (t > 0 && sorted[t - 1] == j))
      throw PreconditionViolated("coordinate subspace indices out of range");
    m(t, j) = 1;
  }
  return Subspace(std::move(m));
}

bool Subspace::contains(const Subspace& sub) const {
  if (sub.ambient_dim() != ambient_dim() || sub.prime() != prime())
    throw DimensionMismatch("containment across different ambient spaces");
  if (sub.dim() > dim()) return false;
  return gf::rank_of_stack(basis_, sub.basis_) == dim();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.prime() != b.prime())
    throw DimensionMismatch("sum across different ambient spaces");
  gf::Matrix m = a.basis_;
  m.append_rows(b.basis_);
  return Subspace::row_span(std::move(m));
}

/// Zassenhaus: row reduce [A | A; B | 0].  Rows whose left half vanishes
/// have right halves spanning the intersection of the row spans.
Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.prime() != b.prime())
    throw DimensionMismatch("intersection across different ambient spaces");
  const int r = a.ambient_dim();
  gf::Matrix big(a.prime(), a.dim() + b.dim(), 2 * r);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < r; ++j) {
      big(i, j) = a.basis()(i, j);
      big(i, r + j) = a.basis()(i, j);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < r; ++j) big(a.dim() + i, j) = b.basis()(i, j);
  big.rref();
  gf::Matrix out(a.prime(), 0, r);
  for (int i = 0; i < big.rows(); ++i) {
    bool left_zero = true;
    for (int j = 0; j < r && left_zero; ++j) left_zero = big(i, j) == 0;
    if (left_zero) out.append_row(big.row(i) + r);
  }
  return Subspace::row_span(std::move(out));
}

FlagChain::FlagChain(std::vector<Subspace> steps) {
  if (steps.empty()) throw PreconditionViolated("empty flag");
  const Subspace& top = steps.back();
  if (top.dim() != top.ambient_dim())
    throw PreconditionViolated("flag does not end at the full space");
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    if (!steps[i + 1].contains(steps[i]))
      throw PreconditionViolated("flag steps are not nested");
  steps_.reserve(steps.size() + 1);
  steps_.push_back(Subspace::zero(top.prime(), top.ambient_dim()));
  for (auto& s : steps) steps_.push_back(std::move(s));
}

FlagChain FlagChain::unchecked(std::vector<Subspace> steps) {
  FlagChain f;
  const Subspace& top = steps.back();
  f.steps_.reserve(steps.size() + 1);
  f.steps_.push_back(Subspace::zero(top.prime(), top.ambient_dim()));
  for (auto& s : steps) f.steps_.push_back(std::move(s));
  return f;
}

const Subspace& FlagChain::step(int i) const {
  if (i < 0 || i >= static_cast<int>(steps_.size()))
    throw PreconditionViolated("flag step index out of range");
  return steps_[i];
}

std::vector<int> FlagChain::type() const {
  std::vector<int> t(length());
  for (int i = 1; i <= length(); ++i) t[i - 1] = steps_[i].dim() - steps_[i - 1].dim();
  return t;
}

MatrixIndex relative_position(const FlagChain& f, const FlagChain& g) {
  const int n = f.length();
  if (g.length() != n || f.prime() != g.prime() ||
      f.ambient_dim() != g.ambient_dim())
    throw DimensionMismatch("relative position of incompatible flags");
  // d[i][j] = dim(V_i cap V'_j), recovered from ranks alone:
  // dim(V cap W) = dim V + dim W - dim(V + W).
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      d[i][j] = f.step(i).dim() + g.step(j).dim() -
                gf::rank_of_stack(f.step(i).basis(), g.step(j).basis());
  MatrixIndex a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a.set(i, j, d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1]);
  return a;
}

std::pair<FlagChain, FlagChain> standard_pair(const MatrixIndex& A,
                                              std::uint32_t p) {
  const int n = A.n();
  const int r = A.sum();
  // Hand the standard basis vectors to the cells (i, j) in lexicographic
  // order; cell (i, j) takes a_{ij} of them.
  std::vector<std::vector<std::vector<int>>> cell(
      n + 1, std::vector<std::vector<int>>(n + 1));
  int next = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k < A.at(i, j); ++k) cell[i][j].push_back(next++);
  std::vector<Subspace> first, second;
  std::vector<int> acc;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j)
      acc.insert(acc.end(), cell[i][j].begin(), cell[i][j].end());
    first.push_back(Subspace::coordinate(p, r, acc));
  }
  acc.clear();
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i)
      acc.insert(acc.end(), cell[i][j].begin(), cell[i][j].end());
    second.push_back(Subspace::coordinate(p, r, acc));
  }
  return {FlagChain::unchecked(std::move(first)),
          FlagChain::unchecked(std::move(second))};
}

void enumerate_subspaces(std::uint32_t p, int ambient, int dim,
                         const std::function<void(const Subspace&)>& visit) {
  for_each_combination(ambient, dim, [&](const std::vector<int>& piv) {
    auto pos = free_positions(piv, ambient);
    gf::Matrix m(p, dim, ambient);
    for (int t = 0; t < dim; ++t) m(t, piv[t]) = 1;
    std::vector<std::uint32_t> vals(pos.size(), 0);
    while (true) {
      visit(Subspace::row_span(m));
      std::size_t k = 0;
      while (k < vals.size()) {
        auto [t, j] = pos[k];
        if (++vals[k] < p) {
          m(t, j) = vals[k];
          break;
        }
        vals[k] = 0;
        m(t, j) = 0;
        ++k;
      }
      if (k == vals.size()) break;
    }
  });
}

void enumerate_superspaces(const Subspace& base, int dim,
                           const std::function<void(const Subspace&)>& visit) {
  const int r = base.ambient_dim();
  const int k = base.dim();
  if (dim < k || dim > r) return;
  // Superspaces of base correspond to subspaces of the quotient.  The
  // quotient is coordinatized by the non-pivot columns of base: reducing a
  // vector modulo base zeroes its pivot coordinates, so placing quotient
  // coordinates at the non-pivot columns (zero elsewhere) is a section.
  const std::vector<int> piv = base.basis().pivot_columns();
  std::vector<int> nonpiv;
  for (int j = 0; j < r; ++j)
    if (!std::binary_search(piv.begin(), piv.end(), j)) nonpiv.push_back(j);
  enumerate_subspaces(base.prime(), r - k, dim - k, [&](const Subspace& w) {
    gf::Matrix m = base.basis();
    for (int i = 0; i < w.dim(); ++i) {
      gf::Matrix lifted(base.prime(), 1, r);
      for (int t = 0; t < r - k; ++t) lifted(0, nonpiv[t]) = w.basis()(i, t);
      m.append_row(lifted.row(0));
    }
    visit(Subspace::row_span(std::move(m)));
  });
}

std::uint64_t subspace_count(std::uint32_t p, int ambient, int dim) {
  std::uint64_t total = 0;
  for_each_combination(ambient, dim, [&](const std::vector<int>& piv) {
    total += u64_pow(p, static_cast<int>(free_positions(piv, ambient).size()));
  });
  return total;
}

void enumerate_flags(const std::vector<int>& step_dims, std::uint32_t p,
                     const std::function<void(const FlagChain&)>& visit) {
  const int n = static_cast<int>(step_dims.size());
  if (n == 0) throw PreconditionViolated("flag type must be non-empty");
  std::vector<int> cum(n);
  int r = 0;
  for (int l = 0; l < n; ++l) {
    if (step_dims[l] < 0) throw PreconditionViolated("negative flag step");
    r += step_dims[l];
    cum[l] = r;
  }
  std::vector<Subspace> chain;
  chain.reserve(n);
  const std::function<void(const Subspace&)> extend = [&](const Subspace& prev) {
    const int level = static_cast<int>(chain.size());
    if (level == n) {
      visit(FlagChain::unchecked(chain));
      return;
    }
    enumerate_superspaces(prev, cum[level], [&](const Subspace& s) {
      chain.push_back(s);
      extend(s);
      chain.pop_back();
    });
  };
  extend(Subspace::zero(p, r));
}

std::vector<FlagChain> all_flags(const std::vector<int>& step_dims,
                                 std::uint32_t p) {
  std::vector<FlagChain> out;
  enumerate_flags(step_dims, p,
                  [&](const FlagChain& f) { out.push_back(f); });
  return out;
}

namespace {

void check_product_margins(const MatrixIndex& A, const MatrixIndex& A2,
                           const MatrixIndex& A3) {
  if (A.n() != A3.n() || A2.n() != A3.n())
    throw PreconditionViolated("structure constant matrices of unequal size");
  if (A.sum() != A3.sum() || A2.sum() != A3.sum())
    throw PreconditionViolated("structure constant matrices of unequal weight");
  if (ro(A3) != ro(A) || co(A3) != co(A2))
    throw PreconditionViolated("candidate margins do not match the factors");
}

}  // namespace

std::uint64_t count_intermediate(const MatrixIndex& A, const MatrixIndex& A2,
                                 const MatrixIndex& A3, std::uint32_t p) {
  check_product_margins(A, A2, A3);
  if (co(A) != ro(A2)) return 0;
  auto [f1, f2] = standard_pair(A3, p);
  std::uint64_t count = 0;
  enumerate_flags(co(A), p, [&](const FlagChain& f) {
    if (relative_position(f1, f) == A && relative_position(f, f2) == A2)
      ++count;
  });
  return count;
}

std::map<std::pair<MatrixIndex, MatrixIndex>, std::uint64_t>
intermediate_position_tally(const MatrixIndex& A3,
                            const std::vector<FlagChain>& middle_flags) {
  std::map<std::pair<MatrixIndex, MatrixIndex>, std::uint64_t> tally;
  if (middle_flags.empty()) return tally;
  if (middle_flags.front().ambient_dim() != A3.sum())
    throw PreconditionViolated("middle flags live in the wrong space");
  auto [f1, f2] = standard_pair(A3, middle_flags.front().prime());
  for (const FlagChain& f : middle_flags)
    ++tally[{relative_position(f1, f), relative_position(f, f2)}];
  return tally;
}

std::map<std::pair<MatrixIndex, MatrixIndex>, std::uint64_t>
intermediate_position_tally(const MatrixIndex& A3,
                            const std::vector<int>& middle_type,
                            std::uint32_t p) {
  std::map<std::pair<MatrixIndex, MatrixIndex>, std::uint64_t> tally;
  auto [f1, f2] = standard_pair(A3, p);
  enumerate_flags(middle_type, p, [&](const FlagChain& f) {
    ++tally[{relative_position(f1, f), relative_position(f, f2)}];
  });
  return tally;
}

}  // namespace qschur
