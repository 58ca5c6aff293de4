#include "qschur/hall.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <vector>

#include "qschur/errors.hpp"
#include "qschur/gfcount.hpp"

namespace qschur {

namespace {

Multisegment semisimple(int n, const std::vector<int>& u) {
  Multisegment m(n);
  for (int l = 1; l <= n - 1; ++l)
    if (u[l - 1] > 0) m.add(l, l + 1, u[l - 1]);
  return m;
}

/// Histogram of (quotient class, submodule class) over all submodules of a
/// semisimple module: every tuple of subspaces is a submodule, and both
/// classes depend only on the dimension profile, so each profile
/// contributes a product of Gaussian binomials without touching any
/// individual subspace.
void bulk_semisimple(const Multisegment& X, std::uint32_t p,
                     const std::vector<int>& dims,
                     std::map<std::pair<Multisegment, Multisegment>,
                              std::uint64_t>& h) {
  const int n = X.n();
  const int nv = n - 1;
  std::vector<int> u(nv, 0), co(nv, 0);
  while (true) {
    std::uint64_t count = 1;
    for (int l = 0; l < nv; ++l) {
      count *= subspace_count(p, dims[l], u[l]);
      co[l] = dims[l] - u[l];
    }
    h[{semisimple(n, co), semisimple(n, u)}] += count;
    int k = 0;
    while (k < nv && u[k] == dims[k]) u[k++] = 0;
    if (k == nv) break;
    ++u[k];
  }
}

}  // namespace

const HallAlgebra::Histogram& HallAlgebra::histogram(const Multisegment& X,
                                                     std::uint32_t p) {
  const std::pair<Multisegment, std::uint32_t> key{X, p};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = histograms_.find(key);
    if (it != histograms_.end()) return it->second;
  }
  Histogram h;
  const QuiverRep rep = realize(X, p);
  const int nv = rep.n() - 1;
  bool all_zero = true;
  for (const gf::Matrix& f : rep.maps)
    for (int i = 0; i < f.rows() && all_zero; ++i)
      for (int j = 0; j < f.cols() && all_zero; ++j)
        all_zero = f(i, j) == 0;
  if (all_zero) {
    bulk_semisimple(X, p, rep.dims, h);
  } else {
    const auto F = composite_table(rep);
    std::vector<Subspace> chosen;
    const auto tally = [&]() {
      RankTable Ts, Tq;
      Ts.n = Tq.n = rep.n();
      Ts.r.assign(rep.n(), std::vector<int>(rep.n(), 0));
      Tq.r.assign(rep.n(), std::vector<int>(rep.n(), 0));
      for (int a = 1; a <= nv; ++a)
        for (int b = a; b <= nv; ++b) {
          if (a == b) {
            Ts.r[a][b] = chosen[a - 1].dim();
            Tq.r[a][b] = rep.dims[a - 1] - chosen[a - 1].dim();
          } else {
            gf::Matrix img = chosen[a - 1].basis() * F[a][b];
            Ts.r[a][b] = img.rref();
            Tq.r[a][b] = gf::rank_of_stack(F[a][b], chosen[b - 1].basis()) -
                         chosen[b - 1].dim();
          }
        }
      ++h[{iso_type_from_ranks(Tq), iso_type_from_ranks(Ts)}];
    };
    const std::function<void()> recurse = [&]() {
      const int l = static_cast<int>(chosen.size());
      if (l == nv) {
        tally();
        return;
      }
      const auto step = [&](const Subspace& s) {
        chosen.push_back(s);
        recurse();
        chosen.pop_back();
      };
      if (l == 0) {
        for (int d = 0; d <= rep.dims[0]; ++d)
          enumerate_subspaces(p, rep.dims[0], d, step);
      } else {
        // A tuple is a submodule iff each structure map carries the chosen
        // subspace into the next one, so only superspaces of the image of
        // the previous choice can appear at this vertex.
        const Subspace image =
            Subspace::row_span(chosen[l - 1].basis() * rep.maps[l - 1]);
        for (int d = image.dim(); d <= rep.dims[l]; ++d)
          enumerate_superspaces(image, d, step);
      }
    };
    recurse();
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return histograms_.emplace(key, std::move(h)).first->second;
}

std::uint64_t HallAlgebra::hall_number(const Multisegment& X,
                                       const Multisegment& M,
                                       const Multisegment& N,
                                       std::uint32_t p) {
  if (M.n() != X.n() || N.n() != X.n())
    throw DimVectorMismatch("Hall number across different index sets");
  const auto dx = dim_vector(X), dm = dim_vector(M), dn = dim_vector(N);
  for (std::size_t l = 0; l < dx.size(); ++l)
    if (dx[l] != dm[l] + dn[l])
      throw DimVectorMismatch("dim(X) must equal dim(M) + dim(N)");
  const Histogram& h = histogram(X, p);
  const auto it = h.find({M, N});
  return it == h.end() ? 0 : it->second;
}

IntPolynomial HallAlgebra::hall_polynomial(const Multisegment& X,
                                           const Multisegment& M,
                                           const Multisegment& N) {
  const std::tuple<Multisegment, Multisegment, Multisegment> key{X, M, N};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = polynomials_.find(key);
    if (it != polynomials_.end()) return it->second;
  }
  const auto dx = dim_vector(X), dn = dim_vector(N);
  int bound = 0;
  for (std::size_t l = 0; l < dx.size(); ++l)
    bound += dn[l] * (dx[l] - dn[l]);
  const auto primes = first_primes(bound + 2);
  std::vector<PrimeSample> samples;
  for (int k = 0; k <= bound; ++k)
    samples.push_back({primes[k], hall_number(X, M, N, primes[k])});
  const IntPolynomial poly = interpolate(samples, bound);
  const std::uint32_t extra = primes[bound + 1];
  if (poly(BigInt(extra)) != BigInt(hall_number(X, M, N, extra)))
    throw NotPolynomial("validation prime disagrees with the interpolant");
  std::lock_guard<std::mutex> lock(mutex_);
  polynomials_.emplace(key, poly);
  return poly;
}

HallElement HallAlgebra::hall_product(const Multisegment& M,
                                      const Multisegment& N) {
  if (M.n() != N.n())
    throw PreconditionViolated("Hall product across index sets");
  const auto dm = dim_vector(M), dn = dim_vector(N);
  std::vector<int> target(dm.size());
  for (std::size_t l = 0; l < dm.size(); ++l) target[l] = dm[l] + dn[l];
  HallElement out;
  for (const Multisegment& X : multisegments_with_dim_vector(M.n(), target)) {
    IntPolynomial poly = hall_polynomial(X, M, N);
    if (!poly.is_zero()) out.emplace(X, std::move(poly));
  }
  return out;
}

namespace {

/// One fold step of the generic extension: Y * M(c, e+1), the interval
/// with vertex support [c, e], as quotient Y over the interval sub.  The
/// extensions of Y by the interval form a plain vector space of connecting
/// maps, so a single generic choice maximizes every composite rank at
/// once.  Against the one-dimensional thread of the interval, the rank
/// from u to v grows by at most one beyond the split value, and it grows
/// exactly when a generic connecting map can feed the thread: u sits left
/// of the junction, [u, v] reaches into the interval, and some vector at u
/// survives to the junction c-1 but dies by v.
Multisegment star_interval(const Multisegment& y, int c, int e) {
  const int n = y.n();
  const RankTable ry = rank_table(y);
  RankTable t;
  t.n = n;
  t.r.assign(n, std::vector<int>(n, 0));
  for (int u = 1; u <= n - 1; ++u)
    for (int v = u; v <= n - 1; ++v) {
      const int split = (c <= u && v <= e) ? 1 : 0;
      const int gain =
          (u < c && c <= v && v <= e && ry.at(u, c - 1) > ry.at(u, v)) ? 1
                                                                       : 0;
      t.r[u][v] = ry.at(u, v) + split + gain;
    }
  return iso_type_from_ranks(t);
}

}  // namespace

Multisegment HallAlgebra::generic_extension(const Multisegment& M,
                                            const Multisegment& N) {
  if (M.n() != N.n())
    throw PreconditionViolated("Hall product across index sets");
  const std::pair<Multisegment, Multisegment> key{M, N};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = extensions_.find(key);
    if (it != extensions_.end()) return it->second;
  }
  // Fold the sub factor in one interval at a time.  Ordered latest start
  // first, no interval of N admits a nonsplit extension by a later one, so
  // the chain of generic extensions of the intervals reassembles N itself,
  // and associativity turns M * N into the iterated fold.
  std::vector<std::array<int, 2>> subs;  // vertex support (start, end)
  for (const auto& [i, j, m] : N.segments())
    for (int k = 0; k < m; ++k) subs.push_back({i, j - 1});
  std::stable_sort(subs.begin(), subs.end(),
                   [](const auto& a, const auto& b) { return a[0] > b[0]; });
  Multisegment out = M;
  for (const auto& [c, e] : subs) out = star_interval(out, c, e);
  std::lock_guard<std::mutex> lock(mutex_);
  extensions_.emplace(key, out);
  return out;
}

Multisegment HallAlgebra::generic_extension_from_hall(const Multisegment& M,
                                                      const Multisegment& N) {
  const HallElement support = hall_product(M, N);
  if (support.empty()) throw EmptySupport("Hall product support is empty");
  std::vector<Multisegment> minima;
  for (const auto& [X, polyX] : support) {
    bool least = true;
    for (const auto& [Y, polyY] : support)
      if (!deg_leq(X, Y)) {
        least = false;
        break;
      }
    if (least) minima.push_back(X);
  }
  // Independent characterization: the dense orbit uniquely minimizes the
  // endomorphism dimension.  Orbit dimension is dim GL - dim End, and any
  // other orbit lies in the closure of the dense one, so is strictly
  // smaller; hence strictly larger End.
  std::vector<Multisegment> end_minimal;
  int best_end = -1;
  for (const auto& [X, poly] : support) {
    const int e = hom_dim(X, X);
    if (best_end < 0 || e < best_end) {
      best_end = e;
      end_minimal.assign(1, X);
    } else if (e == best_end) {
      end_minimal.push_back(X);
    }
  }
  if (minima.size() != 1 || end_minimal.size() != 1 ||
      minima[0] != end_minimal[0])
    throw OracleDisagreement(
        "degeneration minimum and End-dimension minimum disagree for " +
        M.str() + " * " + N.str());
  return minima[0];
}

}  // namespace qschur
