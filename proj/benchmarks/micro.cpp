#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "specdens/aliasing.hpp"
#include "specdens/gridize.hpp"
#include "specdens/models.hpp"
#include "specdens/simulate.hpp"
#include "specdens/special.hpp"
#include "specdens/spline_spectral.hpp"

using namespace specdens;

namespace {

constexpr double kPi = 3.14159265358979323846;

SampleSet random_sample(int n) {
  auto loc = draw_locations(n, static_cast<double>(n), 42);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  SampleSet s;
  s.locations = loc;
  s.domain_length = static_cast<double>(n);
  s.values.resize(loc.size());
  for (auto& v : s.values) v = gauss(rng);
  return s;
}

SpectralEstimate fixture_estimate() {
  SampleSet s = random_sample(500);
  auto grid = GridSpec::from_cutoff(kPi, s.domain_length);
  auto sums = accumulate_lag_sums(s, grid);
  SplineSpectral spline{sums, kPi, 0.5};
  DecayEstimate decay;
  decay.alpha0 = 1.0;
  decay.gamma = 2.0;
  return assemble(spline, decay);
}

void bm_accumulate_lag_sums(benchmark::State& state) {
  SampleSet s = random_sample(static_cast<int>(state.range(0)));
  auto grid = GridSpec::from_cutoff(kPi, s.domain_length);
  for (auto _ : state) benchmark::DoNotOptimize(accumulate_lag_sums(s, grid));
}
BENCHMARK(bm_accumulate_lag_sums)->Arg(250)->Arg(1000);

void bm_eval_f_delta(benchmark::State& state) {
  SampleSet s = random_sample(500);
  auto sums = accumulate_lag_sums(s, GridSpec::from_cutoff(kPi, s.domain_length));
  SplineSpectral spline{sums, kPi, 0.5};
  double w = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_f_delta(spline, w));
    w += 1e-3;
    if (w > kPi) w = 0.0;
  }
}
BENCHMARK(bm_eval_f_delta);

void bm_hurwitz_zeta(benchmark::State& state) {
  double q = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hurwitz_zeta(1.7, q));
    q += 1e-4;
    if (q > 2.0) q = 1.0;
  }
}
BENCHMARK(bm_hurwitz_zeta);

void bm_yz_covariance_table_build(benchmark::State& state) {
  auto est = fixture_estimate();
  for (auto _ : state) {
    YzCovarianceTable table(est, 100.0);
    benchmark::DoNotOptimize(table(50.0));
  }
}
BENCHMARK(bm_yz_covariance_table_build)->Unit(benchmark::kMillisecond);

void bm_yz_covariance_table_eval(benchmark::State& state) {
  auto est = fixture_estimate();
  YzCovarianceTable table(est, 100.0);
  // Stay at or above one table step; smaller lags take the exact quadrature
  // path for the origin cusp, which is a different (much slower) code path.
  double h = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(table(h));
    h += 0.013;
    if (h > 99.0) h = 0.05;
  }
}
BENCHMARK(bm_yz_covariance_table_eval);

void bm_matern_covariance(benchmark::State& state) {
  CovarianceModel m{ModelKind::Matern, 1.0, 1.0, 1.3};
  double h = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(covariance(m, h));
    h += 1e-3;
    if (h > 10.0) h = 0.01;
  }
}
BENCHMARK(bm_matern_covariance);

}  // namespace

BENCHMARK_MAIN();
