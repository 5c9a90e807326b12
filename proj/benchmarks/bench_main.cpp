// Microbenchmarks for the exact-linear-algebra kernels and the product
// constructions. Run with --benchmark_min_time=... to tighten timings.

#include "homleib/capability.hpp"
#include "homleib/catalog.hpp"

#include <benchmark/benchmark.h>

using namespace homleib;

namespace {

Mat random_matrix(int rows, int cols, unsigned long seed) {
  unsigned long state = seed;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rat_of(long(next() % 19) - 9, 1 + long(next() % 7));
  return m;
}

void BM_rref(benchmark::State& state) {
  Mat m = random_matrix(int(state.range(0)), int(state.range(0)), 7);
  for (auto _ : state) {
    auto [r, pivots] = rref(m);
    benchmark::DoNotOptimize(pivots);
  }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_kernel_basis(benchmark::State& state) {
  Mat m = random_matrix(int(state.range(0)) / 2, int(state.range(0)), 11);
  for (auto _ : state) {
    Subspace k = kernel_basis(m);
    benchmark::DoNotOptimize(k.dim());
  }
}
BENCHMARK(BM_kernel_basis)->Arg(16)->Arg(32)->Arg(64);

void BM_boundary_d3(benchmark::State& state) {
  HomLeibnizAlgebra g = heisenberg(int(state.range(0)));
  for (auto _ : state) {
    Mat d3 = boundary_matrix(g, 3);
    benchmark::DoNotOptimize(d3.rows());
  }
  state.counters["dim"] = g.dim;
}
BENCHMARK(BM_boundary_d3)->Arg(1)->Arg(2);

void BM_hl2(benchmark::State& state) {
  HomLeibnizAlgebra g = heisenberg(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hl_dim(g, 2));
}
BENCHMARK(BM_hl2)->Arg(1)->Arg(2);

void BM_validate_algebra(benchmark::State& state) {
  HomLeibnizAlgebra g = direct_sum(heisenberg(2), heisenberg(2));
  for (auto _ : state) benchmark::DoNotOptimize(validate_algebra(g).size());
  state.counters["dim"] = g.dim;
}
BENCHMARK(BM_validate_algebra);

void BM_tensor_square(benchmark::State& state) {
  HomLeibnizAlgebra g = heisenberg(int(state.range(0)));
  for (auto _ : state) {
    ProductPresentation q = tensor_square(g);
    benchmark::DoNotOptimize(q.total.dim);
  }
  state.counters["carrier"] = 2 * g.dim * g.dim;
}
BENCHMARK(BM_tensor_square)->Arg(1)->Arg(2);

void BM_exterior_square_nil3t(benchmark::State& state) {
  HomLeibnizAlgebra g = nil3_twisted();
  for (auto _ : state) {
    ProductPresentation q = exterior_square(g);
    benchmark::DoNotOptimize(q.total.dim);
  }
}
BENCHMARK(BM_exterior_square_nil3t);

void BM_capability_verdict(benchmark::State& state) {
  HomLeibnizAlgebra g = heisenberg(int(state.range(0)));
  for (auto _ : state) {
    auto [capable, rep] = is_capable(g);
    benchmark::DoNotOptimize(capable);
  }
}
BENCHMARK(BM_capability_verdict)->Arg(1)->Arg(2);

void BM_eight_term(benchmark::State& state) {
  HomLeibnizAlgebra g = nil3_twisted();
  Subspace z = Subspace::span(3, {vec_unit(3, 2)});
  for (auto _ : state) {
    CheckReport rep = eight_term_check(g, z);
    benchmark::DoNotOptimize(rep.all_passed());
  }
}
BENCHMARK(BM_eight_term);

} // namespace

BENCHMARK_MAIN();
