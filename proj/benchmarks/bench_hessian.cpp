#include <benchmark/benchmark.h>

#include "drkernel/hessian.hpp"
#include "drkernel/oracle.hpp"
#include "drkernel/random.hpp"

namespace {

using namespace drkernel;

struct Fixture {
  Algebra alg;
  GroupPoint x;
  BoundaryPoint theta = BoundaryPoint::infinity();

  explicit Fixture(int m) : alg(make_algebra(m, 1)) {
    Sampler rng(1);
    x = {rng.box(alg.k(), 2.0), rng.box(alg.m(), 2.0), rng.uniform(0.2, 5.0)};
    theta = BoundaryPoint::finite(rng.box(alg.k(), 2.0), rng.box(alg.m(), 2.0));
  }
};

void BM_ClosedForm(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hessian_closed_form(f.alg, f.x, f.theta));
}

void BM_NumericHessian(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  const oracle::FDConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::numeric_hessian(f.alg, f.x, f.theta, cfg));
}

void BM_BlockDecomposition(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(block_decomposition(f.alg, f.x, f.theta));
}

void BM_Jacobi(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  const Matrix h = hessian_closed_form(f.alg, f.x, f.theta).entries;
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(h));
}

}  // namespace

BENCHMARK(BM_ClosedForm)->Arg(1)->Arg(3)->Arg(7);
BENCHMARK(BM_NumericHessian)->Arg(1)->Arg(3)->Arg(7);
BENCHMARK(BM_BlockDecomposition)->Arg(2)->Arg(3)->Arg(7);
BENCHMARK(BM_Jacobi)->Arg(1)->Arg(3)->Arg(7);

BENCHMARK_MAIN();
