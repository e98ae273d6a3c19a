#include <benchmark/benchmark.h>

#include "rfpca/center.hpp"
#include "rfpca/projection_pursuit.hpp"
#include "rfpca/rng.hpp"
#include "rfpca/scale.hpp"
#include "rfpca/sieve.hpp"
#include "rfpca/simulate.hpp"

using namespace rfpca;

namespace {

FunctionalSample bench_sample(int n, int m) {
  SimModel model;
  model.n = n;
  model.grid = make_grid(-1.0, 1.0, m);
  model.seed = 42;
  return gen_sample(model);
}

void BM_mscale(benchmark::State& state) {
  Rng rng(1);
  std::vector<double> z(static_cast<std::size_t>(state.range(0)));
  for (double& x : z) x = rng.normal();
  const ScaleSpec spec = ScaleSpec::mscale();
  for (auto _ : state) benchmark::DoNotOptimize(m_scale(z, spec).sigma);
}
BENCHMARK(BM_mscale)->Arg(100)->Arg(1000)->Arg(10000);

void BM_spatial_median(benchmark::State& state) {
  const FunctionalSample data = bench_sample(static_cast<int>(state.range(0)), 50);
  for (auto _ : state) benchmark::DoNotOptimize(spatial_median(data).median.values[0]);
}
BENCHMARK(BM_spatial_median)->Arg(100)->Arg(500);

void BM_fit_raw(benchmark::State& state) {
  const FunctionalSample data = bench_sample(100, 50);
  PPConfig cfg;
  cfg.scale = state.range(0) == 0 ? ScaleSpec::sd() : ScaleSpec::mscale();
  cfg.centering = state.range(0) == 0 ? Centering::Mean : Centering::SpatialMedian;
  cfg.q = 3;
  for (auto _ : state) benchmark::DoNotOptimize(fit(data, cfg).values[0]);
}
BENCHMARK(BM_fit_raw)->Arg(0)->Arg(1);

void BM_fit_pen_norm(benchmark::State& state) {
  const FunctionalSample data = bench_sample(100, 50);
  PPConfig cfg;
  cfg.scale = ScaleSpec::mscale();
  cfg.mode = Mode::PenalizeNorm;
  cfg.tau = 0.75e-6;
  cfg.centering = Centering::SpatialMedian;
  cfg.q = 3;
  for (auto _ : state) benchmark::DoNotOptimize(fit(data, cfg).values[0]);
}
BENCHMARK(BM_fit_pen_norm);

void BM_fit_sieve(benchmark::State& state) {
  const FunctionalSample data = bench_sample(100, 50);
  const BasisSpec basis = BasisSpec::fourier(15, data.grid());
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fit_sieve(data, basis, ScaleSpec::mscale(), 3, Centering::SpatialMedian).values[0]);
}
BENCHMARK(BM_fit_sieve);

}  // namespace

BENCHMARK_MAIN();
