#include <benchmark/benchmark.h>

#include "sgh/bounds.hpp"
#include "sgh/correspondence.hpp"
#include "sgh/distortion.hpp"
#include "sgh/rng.hpp"
#include "sgh/simplex.hpp"
#include "sgh/verifier.hpp"

namespace {

void BM_geodesic_dist(benchmark::State& state) {
  sgh::SplitMix64 g(1);
  auto x = sgh::draw_sphere_point(g, 4);
  auto y = sgh::draw_sphere_point(g, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgh::geodesic_dist(x, y));
  }
}
BENCHMARK(BM_geodesic_dist);

void BM_classify_s3(benchmark::State& state) {
  auto s = sgh::RegularSimplex::build(3);
  sgh::SplitMix64 g(2);
  auto x = sgh::draw_sphere_point(g, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgh::classify(x, s));
  }
}
BENCHMARK(BM_classify_s3);

void BM_fn_eval(benchmark::State& state) {
  sgh::FnMap fn(3);
  sgh::SplitMix64 g(3);
  auto x = sgh::draw_sphere_point(g, 4);
  if (x.last() < 0) x = -x;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fn.try_eval(x));
  }
}
BENCHMARK(BM_fn_eval);

void BM_I_case1(benchmark::State& state) {
  double x = sgh::kPi - 2 + 0.3, k = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgh::bounds::I_case1(x, k));
    x += 1e-9;  // defeat constant folding
  }
}
BENCHMARK(BM_I_case1);

void BM_verify_band(benchmark::State& state) {
  auto rect = sgh::default_rect("I_k14");
  auto job = sgh::make_grid_job("I_k14", rect, 2e-2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgh::verify_grid(job, 1));
  }
}
BENCHMARK(BM_verify_band);

void BM_sample_fn(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgh::sample_distortion("fn", 3, 64, 7));
  }
}
BENCHMARK(BM_sample_fn);

}  // namespace

BENCHMARK_MAIN();
