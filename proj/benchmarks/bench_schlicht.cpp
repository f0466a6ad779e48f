// Microbenchmarks for the hot paths: exact Grunsky table construction,
// interval evaluation of the objectives, the floating slack form, and a
// coarse branch-and-bound run.

#include <schlicht/functions.hpp>
#include <schlicht/grunsky.hpp>
#include <schlicht/objective.hpp>
#include <schlicht/optimize.hpp>
#include <schlicht/series.hpp>

#include <benchmark/benchmark.h>

namespace {

void bm_grunsky_exact_order9(benchmark::State& state) {
  auto f = schlicht::builtin_series_exact("koebe", 9);
  for (auto _ : state) {
    auto t = schlicht::grunsky_from_series(schlicht::odd_transform(f), 9);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(bm_grunsky_exact_order9);

void bm_eval_interval_f2(benchmark::State& state) {
  schlicht::Box b{{0.55, 0.62}, {0.18, 0.23}};
  for (auto _ : state) {
    auto v = schlicht::eval_interval(schlicht::Objective::F2, b);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_eval_interval_f2);

void bm_slack_floating(benchmark::State& state) {
  auto f = schlicht::builtin_series_floating("koebe", 9);
  auto t = schlicht::grunsky_from_series(schlicht::odd_transform(f), 9);
  auto vecs = schlicht::sample_test_vectors_floating(64);
  for (auto _ : state) {
    double acc = 0.0;
    for (const auto& v : vecs) acc += schlicht::quadratic_form_slack(t, v);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(bm_slack_floating);

void bm_branch_and_bound_f1(benchmark::State& state) {
  schlicht::BnbOptions opts;
  opts.tol = 1e-3;
  opts.workers = 1;
  for (auto _ : state) {
    auto b = schlicht::branch_and_bound_max(schlicht::Objective::F1, opts);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(bm_branch_and_bound_f1);

}  // namespace

BENCHMARK_MAIN();
