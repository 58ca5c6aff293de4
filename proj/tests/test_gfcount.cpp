// Flag counting over prime fields.  The relative position tests compare the
// production rank-table route against a literal oracle built from subspace
// sums and intersections; the counting tests compare enumeration against
// closed-form Gaussian binomial values frozen by hand.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "qschur/errors.hpp"
#include "qschur/gfcount.hpp"

using qschur::FlagChain;
using qschur::MatrixIndex;
using qschur::Subspace;

namespace {

// Literal form of the relative position: the defining double difference of
// subspace dimensions, computed with actual sums and intersections rather
// than the rank-table shortcut used in production.
MatrixIndex relative_position_literal(const FlagChain& f, const FlagChain& g) {
  const int n = f.length();
  MatrixIndex a(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Subspace& prev = f.step(i - 1);
      const int with_j = sum(prev, intersect(f.step(i), g.step(j))).dim();
      const int with_prev = sum(prev, intersect(f.step(i), g.step(j - 1))).dim();
      a.set(i, j, with_j - with_prev);
    }
  return a;
}

std::vector<FlagChain> flags_of(const std::vector<int>& type, std::uint32_t p) {
  return qschur::all_flags(type, p);
}

// Applies a change of basis to every step of a flag (row-vector convention:
// bases transform by right multiplication).
FlagChain transformed(const FlagChain& f, const qschur::gf::Matrix& t) {
  std::vector<Subspace> steps;
  for (int i = 1; i <= f.length(); ++i)
    steps.push_back(Subspace::row_span(f.step(i).basis() * t));
  return FlagChain(std::move(steps));
}

MatrixIndex mk(const std::vector<std::vector<int>>& rows) {
  MatrixIndex a(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      a.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, rows[i][j]);
  return a;
}

}  // namespace

TEST_CASE("subspace sum, intersection and containment") {
  const std::uint32_t p = 3;
  const Subspace a = Subspace::coordinate(p, 4, {0, 1});
  const Subspace b = Subspace::coordinate(p, 4, {1, 2});
  CHECK(sum(a, b) == Subspace::coordinate(p, 4, {0, 1, 2}));
  CHECK(intersect(a, b) == Subspace::coordinate(p, 4, {1}));
  CHECK(a.contains(intersect(a, b)));
  CHECK(sum(a, b).contains(a));
  CHECK_FALSE(a.contains(b));
  CHECK(Subspace::full(p, 4).contains(a));
  CHECK(a.contains(Subspace::zero(p, 4)));
}

TEST_CASE("modular dimension law on random subspaces") {
  std::mt19937 rng(3u);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
    for (int trial = 0; trial < 40; ++trial) {
      qschur::gf::Matrix ma(p, 2, 4), mb(p, 2, 4);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) {
          ma(i, j) = entry(rng);
          mb(i, j) = entry(rng);
        }
      const Subspace a = Subspace::row_span(ma);
      const Subspace b = Subspace::row_span(mb);
      CHECK(sum(a, b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
      CHECK(a.contains(intersect(a, b)));
      CHECK(b.contains(intersect(a, b)));
      CHECK(sum(a, b).contains(b));
    }
  }
}

TEST_CASE("subspace counts match hand-checked Gaussian binomials") {
  CHECK(qschur::subspace_count(2, 2, 1) == 3);
  CHECK(qschur::subspace_count(2, 3, 1) == 7);
  CHECK(qschur::subspace_count(2, 4, 2) == 35);
  CHECK(qschur::subspace_count(3, 2, 1) == 4);
  CHECK(qschur::subspace_count(3, 4, 2) == 130);
  CHECK(qschur::subspace_count(5, 4, 2) == 806);
  CHECK(qschur::subspace_count(7, 3, 3) == 1);
  CHECK(qschur::subspace_count(7, 3, 0) == 1);
}

TEST_CASE("subspace enumeration is complete and duplicate-free") {
  for (std::uint32_t p : {2u, 3u}) {
    for (int ambient = 0; ambient <= 4; ++ambient)
      for (int dim = 0; dim <= ambient; ++dim) {
        std::set<Subspace> seen;
        qschur::enumerate_subspaces(p, ambient, dim, [&](const Subspace& u) {
          CHECK(u.dim() == dim);
          CHECK(u.ambient_dim() == ambient);
          CHECK(seen.insert(u).second);
        });
        CHECK(seen.size() == qschur::subspace_count(p, ambient, dim));
      }
  }
}

TEST_CASE("superspace enumeration agrees with brute filtering") {
  for (std::uint32_t p : {2u, 3u}) {
    qschur::gf::Matrix rows(p, 1, 3);
    rows(0, 0) = 1;
    rows(0, 2) = p - 1;
    const Subspace base = Subspace::row_span(rows);
    for (int dim = 1; dim <= 3; ++dim) {
      std::set<Subspace> lifted;
      qschur::enumerate_superspaces(base, dim, [&](const Subspace& u) {
        CHECK(u.dim() == dim);
        CHECK(u.contains(base));
        CHECK(lifted.insert(u).second);
      });
      std::set<Subspace> brute;
      qschur::enumerate_subspaces(p, 3, dim, [&](const Subspace& u) {
        if (u.contains(base)) brute.insert(u);
      });
      CHECK(lifted == brute);
      // Containing a fixed line is a quotient-space count.
      CHECK(lifted.size() == qschur::subspace_count(p, 2, dim - 1));
    }
  }
}

TEST_CASE("flag enumeration counts match iterated subspace counts") {
  // Top-down closed form: choose the largest proper step inside the full
  // space, then each next step inside the one above it.
  auto expected = [](const std::vector<int>& type, std::uint32_t p) {
    std::uint64_t total = 1;
    std::vector<int> partial;
    int e = 0;
    for (int d : type) {
      e += d;
      partial.push_back(e);
    }
    for (std::size_t i = partial.size() - 1; i >= 1; --i)
      total *= qschur::subspace_count(p, partial[i], partial[i - 1]);
    return total;
  };
  const std::vector<std::vector<int>> types = {
      {1, 1, 1}, {2, 1}, {1, 2}, {0, 2, 1}, {1, 1, 1, 1}, {2, 2}};
  for (std::uint32_t p : {2u, 3u})
    for (const auto& type : types) {
      const auto flags = flags_of(type, p);
      std::set<FlagChain> seen(flags.begin(), flags.end());
      CHECK(seen.size() == flags.size());
      CHECK(flags.size() == expected(type, p));
      for (const auto& f : flags) CHECK(f.type() == type);
    }
  CHECK(flags_of({1, 1, 1}, 2).size() == 21);  // complete flags in F_2^3
  CHECK(flags_of({1, 1}, 5).size() == 6);
  CHECK(flags_of({2, 1}, 3).size() == 13);
}

TEST_CASE("relative position agrees with the literal double difference") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto lhs = flags_of({1, 1, 1}, p);
    for (const auto& f : lhs)
      for (const auto& g : lhs) {
        const MatrixIndex fast = qschur::relative_position(f, g);
        CHECK(fast == relative_position_literal(f, g));
        CHECK(qschur::ro(fast) == f.type());
        CHECK(qschur::co(fast) == g.type());
        CHECK(qschur::relative_position(g, f) == fast.transposed());
      }
  }
  // Mixed types of equal length.
  const auto fs = flags_of({2, 1}, 2);
  const auto gs = flags_of({1, 2}, 2);
  for (const auto& f : fs)
    for (const auto& g : gs)
      CHECK(qschur::relative_position(f, g) == relative_position_literal(f, g));
}

TEST_CASE("relative position of a flag with itself is its diagonal type") {
  for (const auto& f : flags_of({1, 2}, 3))
    CHECK(qschur::relative_position(f, f) == MatrixIndex::diagonal({1, 2}));
}

TEST_CASE("relative position is invariant under a common change of basis") {
  const std::uint32_t p = 3;
  // An invertible matrix over F_3 (determinant check: its rref is full rank).
  qschur::gf::Matrix t(p, 3, 3);
  t(0, 0) = 1; t(0, 1) = 2; t(0, 2) = 0;
  t(1, 0) = 0; t(1, 1) = 1; t(1, 2) = 1;
  t(2, 0) = 2; t(2, 1) = 0; t(2, 2) = 1;
  {
    qschur::gf::Matrix check = t;
    REQUIRE(check.rref() == 3);
  }
  const auto flags = flags_of({1, 1, 1}, p);
  std::mt19937 rng(17u);
  std::uniform_int_distribution<std::size_t> pick(0, flags.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const FlagChain& f = flags[pick(rng)];
    const FlagChain& g = flags[pick(rng)];
    CHECK(qschur::relative_position(transformed(f, t), transformed(g, t)) ==
          qschur::relative_position(f, g));
  }
}

TEST_CASE("standard pair realizes its matrix") {
  for (std::uint32_t p : {2u, 3u})
    for (int r = 1; r <= 3; ++r)
      for (const auto& a : qschur::all_matrices(3, r)) {
        const auto [f1, f2] = qschur::standard_pair(a, p);
        CHECK(qschur::relative_position(f1, f2) == a);
        CHECK(f1.type() == qschur::ro(a));
        CHECK(f2.type() == qschur::co(a));
      }
  for (const auto& a : qschur::all_matrices(2, 2)) {
    const auto [f1, f2] = qschur::standard_pair(a, 5);
    CHECK(qschur::relative_position(f1, f2) == a);
  }
}

TEST_CASE("intermediate flag counts for a worked product") {
  // For A = [[1,1],[0,0]], A2 = [[0,1],[1,0]] the only candidate with the
  // right margins is A3 = [[1,1],[0,0]], and the count equals p, giving the
  // structure constant q.
  const MatrixIndex a = mk({{1, 1}, {0, 0}});
  const MatrixIndex a2 = mk({{0, 1}, {1, 0}});
  const MatrixIndex a3 = mk({{1, 1}, {0, 0}});
  CHECK(qschur::count_intermediate(a, a2, a3, 2) == 2);
  CHECK(qschur::count_intermediate(a, a2, a3, 3) == 3);
  CHECK(qschur::count_intermediate(a, a2, a3, 5) == 5);
}

TEST_CASE("intermediate counts respect margins") {
  const MatrixIndex a = mk({{1, 1}, {0, 0}});
  const MatrixIndex a2 = mk({{0, 1}, {1, 0}});
  // co(A) = (1,1) but ro([[2,0],[0,0]]) = (2,0): no intermediate flag.
  const MatrixIndex bad_mid = mk({{2, 0}, {0, 0}});
  const MatrixIndex a3_for_bad = mk({{2, 0}, {0, 0}});
  CHECK(qschur::count_intermediate(a, bad_mid, a3_for_bad, 2) == 0);
  // ro(A3) must equal ro(A) and co(A3) must equal co(A2).
  const MatrixIndex wrong = mk({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(qschur::count_intermediate(a, a2, wrong, 2),
                  qschur::PreconditionViolated);
}

TEST_CASE("the joint tally splits the flag set and matches direct counts") {
  const MatrixIndex a3 = mk({{1, 1}, {0, 1}});
  const std::vector<int> middle = {2, 1};
  for (std::uint32_t p : {2u, 3u}) {
    const auto tally = qschur::intermediate_position_tally(a3, middle, p);
    std::uint64_t total = 0;
    for (const auto& [key, count] : tally) {
      CHECK(qschur::ro(key.first) == qschur::ro(a3));
      CHECK(qschur::co(key.first) == middle);
      CHECK(qschur::ro(key.second) == middle);
      CHECK(qschur::co(key.second) == qschur::co(a3));
      CHECK(qschur::count_intermediate(key.first, key.second, a3, p) == count);
      total += count;
    }
    CHECK(total == qschur::all_flags(middle, p).size());
  }
}

TEST_CASE("flag chain validation") {
  const std::uint32_t p = 2;
  const Subspace line = Subspace::coordinate(p, 2, {0});
  const Subspace full = Subspace::full(p, 2);
  const FlagChain ok({line, full});
  CHECK(ok.length() == 2);
  CHECK(ok.step(0) == Subspace::zero(p, 2));
  CHECK(ok.type() == std::vector<int>{1, 1});
  // Not nested.
  CHECK_THROWS_AS(FlagChain({Subspace::coordinate(p, 2, {1}),
                             Subspace::coordinate(p, 2, {0}), full}),
                  qschur::PreconditionViolated);
  // Does not end at the full space.
  CHECK_THROWS_AS(FlagChain({line, line}), qschur::PreconditionViolated);
}
