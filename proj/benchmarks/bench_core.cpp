#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "icost/complexity.hpp"
#include "icost/costing.hpp"
#include "icost/dataset.hpp"
#include "icost/harness.hpp"
#include "icost/learners.hpp"

using namespace icost;

namespace {

struct Problem {
  Matrix X;
  std::vector<int> y;
  WeightVector weights;
};

// A 10:1 two-cluster problem of the requested size, standardized like the
// training pipeline would see it.
Problem make_problem(std::size_t n) {
  const std::size_t n_min = n / 11 + 1;
  Dataset d = make_synthetic("blobs", 12, n - n_min, n_min, 0.5);
  std::vector<int> rows(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) rows[i] = static_cast<int>(i);
  Standardizer s = fit_standardizer(d.features, rows);

  Problem p;
  p.X = transform(s, d.features, rows);
  p.y = binarize(d.labels, 1);
  p.weights.assign(d.n(), 1.0);
  for (std::size_t i = 0; i < d.n(); ++i)
    if (p.y[i] == 1) p.weights[i] = 4.0;
  return p;
}

void BM_knn_profiles(benchmark::State& state) {
  Problem p = make_problem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(knn_profiles(p.X, p.y, 5));
}
BENCHMARK(BM_knn_profiles)->Arg(200)->Arg(1000)->Arg(4000);

void BM_build_mst(benchmark::State& state) {
  Problem p = make_problem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_mst(p.X));
}
BENCHMARK(BM_build_mst)->Arg(200)->Arg(1000)->Arg(2000);

void BM_train_logreg(benchmark::State& state) {
  Problem p = make_problem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(train_logreg(p.X, p.y, p.weights));
}
BENCHMARK(BM_train_logreg)->Arg(200)->Arg(1000);

void BM_train_svm(benchmark::State& state) {
  Problem p = make_problem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(train_linear_svm(p.X, p.y, p.weights, 1e-2, 200, 1));
}
BENCHMARK(BM_train_svm)->Arg(200)->Arg(1000);

void BM_train_tree(benchmark::State& state) {
  Problem p = make_problem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(train_tree(p.X, p.y, p.weights));
}
BENCHMARK(BM_train_tree)->Arg(200)->Arg(1000);

void BM_train_forest(benchmark::State& state) {
  Problem p = make_problem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(train_forest(p.X, p.y, p.weights, 50, 1));
}
BENCHMARK(BM_train_forest)->Arg(200)->Arg(1000);

// The full per-fold pipeline: standardize, profile, weight, fit.
void BM_train_fold(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::size_t n_min = n / 11 + 1;
  Dataset d = make_synthetic("blobs", 12, n - n_min, n_min, 0.5);
  std::vector<int> rows(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) rows[i] = static_cast<int>(i);

  ExperimentPlan plan;
  plan.dataset_path = "synthetic";
  plan.cost.mode = CostMode::neighborhood;
  plan.cost.scheme = CostScheme::ins;
  for (auto _ : state) benchmark::DoNotOptimize(train_fold(d, rows, plan, 3));
}
BENCHMARK(BM_train_fold)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
