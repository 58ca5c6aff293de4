#include "qschur/quivermod.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qschur/errors.hpp"

namespace qschur {

Multisegment Multisegment::interval(int n, int i, int j) {
  Multisegment m(n);
  m.add(i, j, 1);
  return m;
}

Multisegment Multisegment::from_matrix(const MatrixIndex& mult) {
  if (!mult.is_strictly_upper_triangular())
    throw PreconditionViolated("multiplicity matrix must be strictly upper");
  Multisegment m(mult.n());
  m.mult_ = mult;
  return m;
}

void Multisegment::add(int i, int j, int count) {
  if (i < 1 || i >= j || j > n())
    throw PreconditionViolated("interval out of range");
  mult_.add_at(i, j, count);
}

std::vector<std::array<int, 3>> Multisegment::segments() const {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i < n(); ++i)
    for (int j = i + 1; j <= n(); ++j)
      if (mult_.at(i, j) > 0) out.push_back({i, j, mult_.at(i, j)});
  return out;
}

Multisegment Multisegment::operator+(const Multisegment& rhs) const {
  if (rhs.n() != n()) throw PreconditionViolated("direct sum across sizes");
  Multisegment out(n());
  out.mult_ = mult_ + rhs.mult_;
  return out;
}

std::string Multisegment::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [i, j, m] : segments()) {
    if (!first) os << ',';
    first = false;
    os << 'M' << '(' << i << ',' << j << ')';
    if (m > 1) os << '^' << m;
  }
  os << '}';
  return os.str();
}

std::vector<int> dim_vector(const Multisegment& M) {
  const int n = M.n();
  std::vector<int> d(n - 1, 0);
  for (const auto& [i, j, m] : M.segments())
    for (int l = i; l < j; ++l) d[l - 1] += m;
  return d;
}

int total_dim(const Multisegment& M) {
  const auto d = dim_vector(M);
  return std::accumulate(d.begin(), d.end(), 0);
}

int indec_count(const Multisegment& M) { return M.matrix().sum(); }

namespace {

int interval_hom(int a, int b, int c, int d) {
  return (c <= a && a < d && d <= b) ? 1 : 0;
}

}  // namespace

int hom_dim(const Multisegment& M, const Multisegment& N) {
  if (M.n() != N.n()) throw PreconditionViolated("hom across sizes");
  int total = 0;
  for (const auto& [a, b, m] : M.segments())
    for (const auto& [c, d, k] : N.segments())
      total += m * k * interval_hom(a, b, c, d);
  return total;
}

bool deg_leq(const Multisegment& X, const Multisegment& Y) {
  if (X.n() != Y.n() || dim_vector(X) != dim_vector(Y))
    throw DimVectorMismatch("degeneration order needs equal dimension vectors");
  const int n = X.n();
  for (int c = 1; c < n; ++c)
    for (int d = c + 1; d <= n; ++d) {
      const Multisegment I = Multisegment::interval(n, c, d);
      if (hom_dim(X, I) > hom_dim(Y, I)) return false;
    }
  return true;
}

Multisegment iso_type_from_ranks(const RankTable& T) {
  Multisegment m(T.n);
  for (int a = 1; a < T.n; ++a)
    for (int b = a + 1; b <= T.n; ++b) {
      const int mult = T.at(a, b - 1) - T.at(a - 1, b - 1) - T.at(a, b) +
                       T.at(a - 1, b);
      if (mult < 0) throw InconsistentRanks("negative multiplicity");
      if (mult > 0) m.add(a, b, mult);
    }
  return m;
}

std::pair<Multisegment, Multisegment> min_projective_resolution(
    const Multisegment& M) {
  const int n = M.n();
  Multisegment P(n), Q(n);
  for (const auto& [i, j, m] : M.segments()) {
    P.add(i, n, m);
    if (j < n) Q.add(j, n, m);
  }
  return {P, Q};
}

std::vector<Multisegment> multisegments_with_dim_vector(
    int n, const std::vector<int>& d) {
  if (static_cast<int>(d.size()) != n - 1)
    throw PreconditionViolated("dimension vector length must be n-1");
  std::vector<std::pair<int, int>> intervals;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) intervals.emplace_back(i, j);
  std::vector<Multisegment> out;
  std::vector<int> rem = d;
  Multisegment cur(n);
  const std::function<void(std::size_t)> recurse = [&](std::size_t k) {
    if (k == intervals.size()) {
      if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; }))
        out.push_back(cur);
      return;
    }
    const auto [i, j] = intervals[k];
    // Later intervals in the ordering only cover vertices >= i, so any
    // remaining dimension strictly left of i is unreachable.
    for (int l = 1; l < i; ++l)
      if (rem[l - 1] != 0) return;
    int most = rem[i - 1];
    for (int l = i; l < j; ++l) most = std::min(most, rem[l - 1]);
    for (int m = 0; m <= most; ++m) {
      if (m > 0) {
        cur.add(i, j, 1);
        for (int l = i; l < j; ++l) --rem[l - 1];
      }
      recurse(k + 1);
    }
    if (most > 0) {
      cur.add(i, j, -most);
      for (int l = i; l < j; ++l) rem[l - 1] += most;
    }
  };
  recurse(0);
  return out;
}

QuiverRep realize(const Multisegment& M, std::uint32_t p) {
  const int n = M.n();
  QuiverRep rep;
  rep.p = p;
  rep.dims = dim_vector(M);
  // Expand the multiset into individual summands, then hand each summand a
  // basis vector at every vertex it covers, in segment order.
  std::vector<std::pair<int, int>> summand;
  for (const auto& [i, j, m] : M.segments())
    for (int c = 0; c < m; ++c) summand.emplace_back(i, j);
  std::vector<std::vector<int>> pos(summand.size(),
                                    std::vector<int>(n, -1));  // [s][l-1]
  std::vector<int> next(n - 1, 0);
  for (std::size_t s = 0; s < summand.size(); ++s)
    for (int l = summand[s].first; l < summand[s].second; ++l)
      pos[s][l - 1] = next[l - 1]++;
  for (int l = 1; l <= n - 2; ++l) {
    gf::Matrix f(p, rep.dims[l - 1], rep.dims[l]);
    for (std::size_t s = 0; s < summand.size(); ++s)
      if (summand[s].first <= l && l + 1 < summand[s].second)
        f(pos[s][l - 1], pos[s][l]) = 1;
    rep.maps.push_back(std::move(f));
  }
  return rep;
}

std::vector<std::vector<gf::Matrix>> composite_table(const QuiverRep& rep) {
  const int n = rep.n();
  std::vector<std::vector<gf::Matrix>> F(
      n, std::vector<gf::Matrix>(n, gf::Matrix(rep.p, 0, 0)));
  for (int i = 1; i <= n - 1; ++i) {
    F[i][i] = gf::Matrix::identity(rep.p, rep.dims[i - 1]);
    for (int j = i + 1; j <= n - 1; ++j)
      F[i][j] = F[i][j - 1] * rep.maps[j - 2];
  }
  return F;
}

RankTable rank_table(const QuiverRep& rep) {
  const int n = rep.n();
  const auto F = composite_table(rep);
  RankTable T;
  T.n = n;
  T.r.assign(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) {
      gf::Matrix m = F[i][j];
      T.r[i][j] = m.rref();
    }
  return T;
}

RankTable rank_table(const Multisegment& M) {
  RankTable T;
  T.n = M.n();
  T.r.assign(T.n, std::vector<int>(T.n, 0));
  for (const auto& [i, j, m] : M.segments())
    for (int u = i; u <= j - 1; ++u)
      for (int v = u; v <= j - 1; ++v) T.r[u][v] += m;
  return T;
}

Multisegment iso_type(const QuiverRep& rep) {
  return iso_type_from_ranks(rank_table(rep));
}

}  // namespace qschur
