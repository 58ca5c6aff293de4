#include "qschur/verify.hpp"

#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "qschur/errors.hpp"
#include "qschur/genmul.hpp"
#include "qschur/parallel.hpp"

namespace qschur {

Json VerifyReport::to_json() const {
  Json out;
  out["suite"] = suite;
  out["passed"] = passed();
  out["parameters"] = parameters;
  out["cases_run"] = cases_run;
  Json fails = Json::array();
  for (const VerifyFailure& f : failures) {
    Json one;
    one["inputs"] = f.inputs;
    one["expected"] = f.expected;
    one["got"] = f.got;
    fails.push_back(std::move(one));
  }
  out["failures"] = std::move(fails);
  return out;
}

namespace {

/// Shared per-suite machinery: one algebra pair, case-indexed parallel
/// execution, failures collected in case order.
struct SuiteContext {
  explicit SuiteContext(const VerifyOptions& opt)
      : opt(opt),
        schur(opt.n, opt.r,
              SchurOptions{opt.primes, opt.cache_dir, opt.jobs}) {}

  const VerifyOptions& opt;
  SchurAlgebra schur;
  HallAlgebra hall;

  void run(VerifyReport& report, std::size_t cases,
           const std::function<std::optional<VerifyFailure>(std::size_t)>& f) {
    std::vector<std::optional<VerifyFailure>> slots(cases);
    parallel_for(cases, opt.jobs,
                 [&](std::size_t i) { slots[i] = f(i); });
    report.cases_run += static_cast<long>(cases);
    for (auto& slot : slots)
      if (slot) report.failures.push_back(std::move(*slot));
  }
};

IntPolynomial q_plus_one() {
  return IntPolynomial::variable() + IntPolynomial(1);
}

/// Every module class on n with the given total dimension.
std::vector<Multisegment> modules_with_total_dim(int n, int total) {
  std::vector<Multisegment> out;
  for (const std::vector<int>& d : compositions(total, n - 1))
    for (const Multisegment& m : multisegments_with_dim_vector(n, d))
      out.push_back(m);
  return out;
}

/// Every module class on n with total dimension up to the bound, in a
/// fixed canonical order.
std::vector<Multisegment> modules_up_to_dim(int n, int bound) {
  std::vector<Multisegment> out;
  for (int total = 0; total <= bound; ++total)
    for (Multisegment& m : modules_with_total_dim(n, total))
      out.push_back(std::move(m));
  return out;
}

VerifyReport suite_serre(SuiteContext& ctx) {
  VerifyReport report;
  const int n = ctx.opt.n;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (i != j) pairs.emplace_back(i, j);
  ctx.run(report, pairs.size(), [&](std::size_t k) -> std::optional<VerifyFailure> {
    const auto [i, j] = pairs[k];
    const SchurElement ei = ctx.schur.e_generator(i);
    const SchurElement ej = ctx.schur.e_generator(j);
    SchurElement lhs;
    if (std::abs(i - j) == 1) {
      const SchurElement t1 =
          ctx.schur.generator_times(i, ctx.schur.generator_times(i, ej));
      const SchurElement t2 =
          ctx.schur.generator_times(i, ctx.schur.generator_times(j, ei));
      const SchurElement t3 =
          ctx.schur.generator_times(j, ctx.schur.generator_times(i, ei));
      // The q weight mirrors between the two adjacent orders: with j above
      // i it sits on E_j E_i^2, with j below i on E_i^2 E_j.
      lhs = (j == i + 1) ? t1 - t2.scaled(q_plus_one()) +
                               t3.scaled(IntPolynomial::variable())
                         : t1.scaled(IntPolynomial::variable()) -
                               t2.scaled(q_plus_one()) + t3;
    } else {
      lhs = ctx.schur.generator_times(i, ej) - ctx.schur.generator_times(j, ei);
    }
    if (lhs.is_zero()) return std::nullopt;
    std::ostringstream in;
    in << "i=" << i << " j=" << j;
    return VerifyFailure{in.str(), "0", lhs.str()};
  });
  return report;
}

VerifyReport suite_assoc(SuiteContext& ctx) {
  VerifyReport report;
  const std::vector<MatrixIndex> uppers =
      upper_triangular_matrices(ctx.opt.n, ctx.opt.r);
  const auto check = [&](const MatrixIndex& a, const MatrixIndex& b,
                         const MatrixIndex& c) -> std::optional<VerifyFailure> {
    const GenericProduct ab = generic_multiply(a, b, ctx.hall);
    const GenericProduct lhs = ab.is_zero()
                                   ? GenericProduct::zero()
                                   : generic_multiply(ab.matrix(), c, ctx.hall);
    const GenericProduct bc = generic_multiply(b, c, ctx.hall);
    const GenericProduct rhs = bc.is_zero()
                                   ? GenericProduct::zero()
                                   : generic_multiply(a, bc.matrix(), ctx.hall);
    if (lhs == rhs) return std::nullopt;
    return VerifyFailure{
        "A=" + a.str() + " A2=" + b.str() + " A3=" + c.str(),
        "(A o A2) o A3 = A o (A2 o A3)", lhs.str() + " vs " + rhs.str()};
  };
  if (ctx.opt.n <= 3) {
    const std::size_t m = uppers.size();
    ctx.run(report, m * m * m, [&](std::size_t idx) {
      const std::size_t k = idx % m, j = (idx / m) % m, i = idx / (m * m);
      return check(uppers[i], uppers[j], uppers[k]);
    });
  } else {
    std::mt19937 rng(ctx.opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, uppers.size() - 1);
    std::vector<std::array<std::size_t, 3>> triples;
    for (int s = 0; s < ctx.opt.samples; ++s)
      triples.push_back({pick(rng), pick(rng), pick(rng)});
    ctx.run(report, triples.size(), [&](std::size_t idx) {
      const auto [i, j, k] = triples[idx];
      return check(uppers[i], uppers[j], uppers[k]);
    });
  }
  return report;
}

VerifyReport suite_unit(SuiteContext& ctx) {
  VerifyReport report;
  const SchurElement one = ctx.schur.unit();
  const std::vector<MatrixIndex> all = all_matrices(ctx.opt.n, ctx.opt.r);
  ctx.run(report, all.size(), [&](std::size_t k) -> std::optional<VerifyFailure> {
    const MatrixIndex& a = all[k];
    const SchurElement ea = SchurElement::basis(a);
    const SchurElement left = ctx.schur.multiply(one, ea);
    const SchurElement right = ctx.schur.multiply(ea, one);
    if (!(left == ea))
      return VerifyFailure{"A=" + a.str(), "1*e_A = e_A", left.str()};
    if (!(right == ea))
      return VerifyFailure{"A=" + a.str(), "e_A*1 = e_A", right.str()};
    return std::nullopt;
  });
  const std::vector<MatrixIndex> uppers =
      upper_triangular_matrices(ctx.opt.n, ctx.opt.r);
  const std::vector<MatrixIndex> diagonals =
      diagonal_matrices(ctx.opt.n, ctx.opt.r);
  ctx.run(report, uppers.size(), [&](std::size_t k) -> std::optional<VerifyFailure> {
    const MatrixIndex& a = uppers[k];
    // Unit law for the generic product: among the diagonal basis terms of
    // the unit, exactly one composes with e_A on each side, giving back A.
    std::vector<MatrixIndex> left, right;
    for (const MatrixIndex& d : diagonals) {
      const GenericProduct da = generic_multiply(d, a, ctx.hall);
      if (!da.is_zero()) left.push_back(da.matrix());
      const GenericProduct ad = generic_multiply(a, d, ctx.hall);
      if (!ad.is_zero()) right.push_back(ad.matrix());
    }
    const auto describe = [](const std::vector<MatrixIndex>& v) {
      std::string s = "[";
      for (const MatrixIndex& m : v) s += m.str();
      return s + "]";
    };
    if (left.size() != 1 || !(left[0] == a))
      return VerifyFailure{"A=" + a.str(), "sum_D e_D o e_A = e_A",
                           describe(left)};
    if (right.size() != 1 || !(right[0] == a))
      return VerifyFailure{"A=" + a.str(), "e_A o sum_D e_D = e_A",
                           describe(right)};
    return std::nullopt;
  });
  return report;
}

/// Pairwise expansion of the generic product of two elements with unit
/// coefficients: the multiset of nonzero e_B o e_A over all pairs of basis
/// terms (B from `lhs`, A from `rhs`).
std::map<MatrixIndex, int> pairwise_generic_product(const SchurElement& lhs,
                                                    const SchurElement& rhs,
                                                    HallAlgebra& hall) {
  std::map<MatrixIndex, int> got;
  for (const auto& [bm, cb] : lhs.terms())
    for (const auto& [am, ca] : rhs.terms()) {
      const GenericProduct g = generic_multiply(bm, am, hall);
      if (!g.is_zero()) ++got[g.matrix()];
    }
  return got;
}

/// True when `got` consists of exactly the basis terms of `expected`, each
/// produced once.
bool matches_terms_once(const std::map<MatrixIndex, int>& got,
                        const SchurElement& expected) {
  if (got.size() != expected.terms().size()) return false;
  for (const auto& [key, count] : got)
    if (count != 1 || expected.terms().find(key) == expected.terms().end())
      return false;
  return true;
}

std::string describe_counts(const std::map<MatrixIndex, int>& got) {
  std::string s = "{";
  for (const auto& [key, count] : got)
    s += key.str() + "x" + std::to_string(count);
  return s + "}";
}

VerifyReport suite_gamma_hom(SuiteContext& ctx) {
  VerifyReport report;
  const int n = ctx.opt.n, r = ctx.opt.r;
  const std::vector<Multisegment> mods = modules_up_to_dim(n, ctx.opt.dim_bound);
  std::vector<std::pair<std::size_t, std::size_t>> cases;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < mods.size(); ++j)
      if (total_dim(mods[i]) + total_dim(mods[j]) <= ctx.opt.dim_bound)
        cases.emplace_back(i, j);
  ctx.run(report, cases.size(), [&](std::size_t k) -> std::optional<VerifyFailure> {
    const Multisegment& M = mods[cases[k].first];
    const Multisegment& N = mods[cases[k].second];
    const Multisegment X = ctx.hall.generic_extension(M, N);
    const SchurElement lhs = gamma(X, r);
    // Right side, term by term: every pair of basis terms of Gamma(M) and
    // Gamma(N) contributes its generic product when composable, and the
    // nonzero products are pairwise distinct terms of Gamma(M*N).
    const std::map<MatrixIndex, int> got =
        pairwise_generic_product(gamma(M, r), gamma(N, r), ctx.hall);
    if (matches_terms_once(got, lhs)) return std::nullopt;
    return VerifyFailure{"M=" + M.str() + " N=" + N.str(),
                         "Gamma(M*N) = " + lhs.str(), describe_counts(got)};
  });
  return report;
}

VerifyReport suite_ker_gamma(SuiteContext& ctx) {
  VerifyReport report;
  const std::vector<Multisegment> mods =
      modules_up_to_dim(ctx.opt.n, ctx.opt.dim_bound);
  ctx.run(report, mods.size(), [&](std::size_t k) -> std::optional<VerifyFailure> {
    const Multisegment& M = mods[k];
    const bool vanishes = gamma(M, ctx.opt.r).is_zero();
    const bool should = indec_count(M) > ctx.opt.r;
    if (vanishes == should) return std::nullopt;
    return VerifyFailure{
        "M=" + M.str(),
        should ? "Gamma(M) = 0 (summand count exceeds r)"
               : "Gamma(M) != 0 (summand count within r)",
        vanishes ? "zero" : "nonzero"};
  });
  return report;
}

/// Shared case list of mult_basis and zero_schur: ordered pairs of strict
/// upper triangular matrices with entry sums at most r.
std::vector<std::pair<MatrixIndex, MatrixIndex>> strict_upper_pairs(int n,
                                                                    int r) {
  std::vector<MatrixIndex> singles;
  for (int s = 0; s <= r; ++s)
    for (const MatrixIndex& a : strictly_upper_matrices(n, s))
      singles.push_back(a);
  std::vector<std::pair<MatrixIndex, MatrixIndex>> pairs;
  for (const MatrixIndex& a : singles)
    for (const MatrixIndex& b : singles) pairs.emplace_back(a, b);
  return pairs;
}

VerifyReport suite_mult_basis(SuiteContext& ctx) {
  VerifyReport report;
  const int r = ctx.opt.r;
  const auto pairs = strict_upper_pairs(ctx.opt.n, r);
  ctx.run(report, pairs.size(), [&](std::size_t k) -> std::optional<VerifyFailure> {
    const auto& [a, b] = pairs[k];
    const Multisegment M = Multisegment::from_matrix(a);
    const Multisegment N = Multisegment::from_matrix(b);
    // Under the generic product the l elements multiply like a monoid
    // basis: expanding l_A o l_B pairwise over basis terms, the nonzero
    // products are pairwise distinct and assemble exactly the terms of the
    // l element of the generic extension (none at all when that element
    // vanishes because the extension needs more than r summands).
    const std::map<MatrixIndex, int> got = pairwise_generic_product(
        l_element(M, r), l_element(N, r), ctx.hall);
    const SchurElement expected =
        l_element(ctx.hall.generic_extension(M, N), r);
    if (matches_terms_once(got, expected)) return std::nullopt;
    return VerifyFailure{"A=" + a.str() + " B=" + b.str(),
                         "l of the generic extension: " + expected.str(),
                         describe_counts(got)};
  });
  return report;
}

VerifyReport suite_zero_schur(SuiteContext& ctx) {
  VerifyReport report;
  const int n = ctx.opt.n, r = ctx.opt.r;
  const std::vector<Multisegment> mods = modules_up_to_dim(n, ctx.opt.dim_bound);
  std::vector<std::pair<std::size_t, std::size_t>> cases;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < mods.size(); ++j)
      if (total_dim(mods[i]) + total_dim(mods[j]) <= ctx.opt.dim_bound)
        cases.emplace_back(i, j);
  ctx.run(report, cases.size(), [&](std::size_t k) -> std::optional<VerifyFailure> {
    const Multisegment& M = mods[cases[k].first];
    const Multisegment& N = mods[cases[k].second];
    const SchurElement la = l_element(M, r);
    const SchurElement lb = l_element(N, r);
    // Route one, inside the specialised algebra: setting q = 0 in the
    // product of two l elements must match the Hall expansion with every
    // structure polynomial evaluated at zero.
    const SchurElement q0 = specialize0(ctx.schur.multiply(la, lb));
    SchurElement expanded;
    for (const auto& [X, coeff] : ctx.hall.hall_product(M, N))
      expanded += l_element(X, r).scaled(IntPolynomial(coeff(0)));
    if (!(q0 == expanded))
      return VerifyFailure{"M=" + M.str() + " N=" + N.str(),
                           "Hall expansion at q=0: " + expanded.str(),
                           q0.str()};
    // Route two, on the generic-product side: the pairwise table of the
    // same two l elements realises the monoid product.
    const std::map<MatrixIndex, int> got =
        pairwise_generic_product(la, lb, ctx.hall);
    const SchurElement viaMonoid =
        l_element(ctx.hall.generic_extension(M, N), r);
    if (matches_terms_once(got, viaMonoid)) return std::nullopt;
    return VerifyFailure{"M=" + M.str() + " N=" + N.str(),
                         "l of the generic extension: " + viaMonoid.str(),
                         describe_counts(got)};
  });
  return report;
}

VerifyReport suite_theta_hom(SuiteContext& ctx) {
  VerifyReport report;
  const int n = ctx.opt.n, r = ctx.opt.r;
  const std::vector<Multisegment> mods = modules_up_to_dim(n, r);
  // The Hall expansion is exponential in the combined dimension, so the
  // sampled pairs respect the same combined cap as the other module
  // suites.
  std::vector<std::pair<std::size_t, std::size_t>> pool;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < mods.size(); ++j)
      if (total_dim(mods[i]) + total_dim(mods[j]) <= ctx.opt.dim_bound)
        pool.emplace_back(i, j);
  std::mt19937 rng(ctx.opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::pair<std::size_t, std::size_t>> cases;
  for (int s = 0; s < ctx.opt.samples; ++s) cases.push_back(pool[pick(rng)]);
  ctx.run(report, cases.size(), [&](std::size_t k) -> std::optional<VerifyFailure> {
    const Multisegment& M = mods[cases[k].first];
    const Multisegment& N = mods[cases[k].second];
    SchurElement lhs;
    for (const auto& [X, coeff] : ctx.hall.hall_product(M, N))
      lhs += theta(X, r).scaled(coeff);
    const SchurElement rhs = ctx.schur.multiply(theta(M, r), theta(N, r));
    if (lhs == rhs) return std::nullopt;
    return VerifyFailure{"M=" + M.str() + " N=" + N.str(), rhs.str(),
                         lhs.str()};
  });
  return report;
}

}  // namespace

VerifyReport verify_suite(const std::string& name, const VerifyOptions& opt) {
  SuiteContext ctx(opt);
  VerifyReport report;
  if (name == "serre")
    report = suite_serre(ctx);
  else if (name == "assoc")
    report = suite_assoc(ctx);
  else if (name == "unit")
    report = suite_unit(ctx);
  else if (name == "gamma_hom")
    report = suite_gamma_hom(ctx);
  else if (name == "ker_gamma")
    report = suite_ker_gamma(ctx);
  else if (name == "mult_basis")
    report = suite_mult_basis(ctx);
  else if (name == "zero_schur")
    report = suite_zero_schur(ctx);
  else if (name == "theta_hom")
    report = suite_theta_hom(ctx);
  else
    throw UnknownSuite("no suite named " + name);
  report.suite = name;
  Json params;
  params["n"] = opt.n;
  params["r"] = opt.r;
  if (name == "gamma_hom" || name == "ker_gamma" || name == "zero_schur" ||
      name == "theta_hom")
    params["dim_bound"] = opt.dim_bound;
  if (name == "theta_hom" || (name == "assoc" && opt.n > 3)) {
    params["samples"] = opt.samples;
    params["seed"] = opt.seed;
  }
  report.parameters = std::move(params);
  return report;
}

}  // namespace qschur
