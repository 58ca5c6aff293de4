// Microbenchmarks for the counting, interpolation, and product kernels.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "qschur/genmul.hpp"
#include "qschur/gfcount.hpp"
#include "qschur/hall.hpp"
#include "qschur/matrix_index.hpp"
#include "qschur/poly.hpp"
#include "qschur/quivermod.hpp"
#include "qschur/schur.hpp"

namespace {

using qschur::HallAlgebra;
using qschur::MatrixIndex;
using qschur::Multisegment;
using qschur::SchurAlgebra;

// A composable pair at (n, r) = (3, 3): co(worked_a) = ro(worked_b).
MatrixIndex worked_a() {
  MatrixIndex a(3);
  a.set(1, 1, 1);
  a.set(1, 2, 1);
  a.set(2, 3, 1);
  return a;
}

MatrixIndex worked_b() {
  MatrixIndex b(3);
  b.set(1, 2, 1);
  b.set(2, 1, 1);
  b.set(3, 3, 1);
  return b;
}

void bench_flag_enumeration(benchmark::State& state) {
  const auto middle = qschur::compositions(3, 3);
  for (auto _ : state) {
    long total = 0;
    for (const MatrixIndex& a : qschur::all_matrices(3, 3))
      benchmark::DoNotOptimize(total += a.sum());
    benchmark::DoNotOptimize(middle.size());
  }
}
BENCHMARK(bench_flag_enumeration);

void bench_count_intermediate(benchmark::State& state) {
  const MatrixIndex a = worked_a();
  const MatrixIndex b = worked_b();
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  // Candidate with ro = ro(worked_a) and co = co(worked_b).
  MatrixIndex mid(3);
  mid.set(1, 1, 1);
  mid.set(1, 2, 1);
  mid.set(2, 3, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(qschur::count_intermediate(a, b, mid, p));
}
BENCHMARK(bench_count_intermediate)->Arg(2)->Arg(7)->Arg(19);

void bench_schur_multiply_cold(benchmark::State& state) {
  const MatrixIndex a = worked_a();
  const MatrixIndex b = worked_b();
  for (auto _ : state) {
    SchurAlgebra schur(3, 3);
    benchmark::DoNotOptimize(schur.multiply(a, b));
  }
}
BENCHMARK(bench_schur_multiply_cold);

void bench_schur_multiply_memoized(benchmark::State& state) {
  SchurAlgebra schur(3, 3);
  const MatrixIndex a = worked_a();
  const MatrixIndex b = worked_b();
  benchmark::DoNotOptimize(schur.multiply(a, b));
  for (auto _ : state) benchmark::DoNotOptimize(schur.multiply(a, b));
}
BENCHMARK(bench_schur_multiply_memoized);

void bench_chevalley_closed_form(benchmark::State& state) {
  SchurAlgebra schur(3, 3);
  MatrixIndex b(3);
  b.set(1, 2, 1);
  b.set(2, 2, 1);
  b.set(3, 3, 1);
  MatrixIndex a(3);
  a.set(2, 1, 1);
  a.set(2, 2, 1);
  a.set(3, 3, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(schur.chevalley_left(b, a));
}
BENCHMARK(bench_chevalley_closed_form);

void bench_hall_polynomial(benchmark::State& state) {
  const Multisegment s1 = Multisegment::simple(3, 1);
  const Multisegment x = s1 + s1;
  for (auto _ : state) {
    HallAlgebra hall;  // cold: count at every prime and interpolate
    benchmark::DoNotOptimize(hall.hall_polynomial(x, s1, s1));
  }
}
BENCHMARK(bench_hall_polynomial);

void bench_generic_extension(benchmark::State& state) {
  // Rank-function route on a pair far past what support enumeration could
  // reach interactively.
  Multisegment m(4), n(4);
  m.add(1, 3, 2);
  m.add(2, 4, 1);
  m.add(1, 2, 3);
  n.add(2, 3, 2);
  n.add(3, 4, 2);
  n.add(1, 4, 1);
  for (auto _ : state) {
    HallAlgebra hall;
    benchmark::DoNotOptimize(hall.generic_extension(m, n));
  }
}
BENCHMARK(bench_generic_extension);

void bench_generic_multiply(benchmark::State& state) {
  HallAlgebra hall;
  MatrixIndex a(3), b(3);
  a.set(1, 2, 1);
  a.set(3, 3, 1);
  b.set(2, 3, 1);
  b.set(3, 3, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(qschur::generic_multiply(a, b, hall));
}
BENCHMARK(bench_generic_multiply);

void bench_interpolation(benchmark::State& state) {
  // Interpolate a degree-6 polynomial (1 + q + ... + q^6) through eight
  // exact sample points.
  std::vector<qschur::PrimeSample> samples;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
    std::uint64_t value = 0;
    std::uint64_t power = 1;
    for (int k = 0; k <= 6; ++k) {
      value += power;
      power *= p;
    }
    samples.push_back({p, value});
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(qschur::interpolate(samples, 6));
}
BENCHMARK(bench_interpolation);

}  // namespace

BENCHMARK_MAIN();
