#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icost/costing.hpp"
#include "icost/dataset.hpp"
#include "icost/learners.hpp"
#include "icost/metrics.hpp"
#include "icost/multiclass.hpp"

namespace icost {

/// A grid candidate: an absolute value, or a multiple of the dataset IR.
struct GridValue {
  double factor = 1.0;
  bool times_ir = false;

  double resolve(double ir) const { return times_ir ? factor * ir : factor; }
  std::string text() const;  // "1", "IR", "0.2*IR"

  bool operator==(const GridValue&) const = default;
};

/// Accepts "<number>", "IR", or "<number>*IR".
GridValue parse_grid_value(const std::string& text);

struct GridAxis {
  std::string name;  // "cost", "pure", "safe", "border", "linked", "normal"
  std::vector<GridValue> values;

  bool operator==(const GridAxis&) const = default;
};

/// Cartesian candidate grid. Cells enumerate in odometer order with the last
/// axis varying fastest.
struct GridSpec {
  std::vector<GridAxis> axes;

  std::size_t n_cells() const;

  bool operator==(const GridSpec&) const = default;
};

/// Built-in candidate grid for each algorithm. original: cost in {0.8, 0.9,
/// 1, 1.1, 1.2}*IR. neighborhood/ins: pure in {1, 0.2*IR}, safe in {0.25,
/// 0.35, 0.5}*IR, border in {0.75, 0.9, 1, 1.1, 1.25}*IR. mst: linked in
/// {0.75, 0.9, 1, 1.1, 1.25}*IR, normal in {0.3, 0.5, 0.7}*IR. There is no
/// built-in grid for the gen scheme.
GridSpec default_grid(CostMode mode, CostScheme scheme);

struct ExperimentPlan {
  std::string dataset_path;
  std::string label_column = "last";
  std::string positive = "auto";
  LearnerConfig learner;
  CostSpec cost;
  int n_folds = 5;
  int n_repeats = 10;
  std::uint64_t seed = 0;
  int threads = 1;  // 0 = hardware concurrency
  std::optional<GridSpec> grid;

  bool operator==(const ExperimentPlan&) const = default;
};

struct DatasetSummary {
  std::string path;
  std::size_t n = 0;
  std::size_t dims = 0;
  std::size_t n_classes = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> class_counts;
  bool multiclass = false;   // one-vs-rest path
  std::string positive;      // resolved positive label ("" when multiclass)
  double ir = 0.0;           // full-dataset IR (0 when multiclass)
};

struct FoldOutcome {
  int repeat = 0;
  int fold = 0;
  FoldMetrics metrics;
};

struct ExperimentResult {
  DatasetSummary dataset;
  ExperimentPlan plan;
  std::vector<FoldOutcome> folds;  // ordered by (repeat, fold)
  FoldMetrics mean;
  FoldMetrics stdev;
};

/// Everything fitted from one training partition. Binary tasks fill `binary`;
/// datasets with 3+ classes (and positive = "auto") fill `ovr`.
struct FoldModel {
  Standardizer standardizer;
  bool multiclass = false;
  int positive_id = 1;
  int negative_id = 0;  // may be ImbalanceStats::pooled_rest
  double ir = 1.0;      // training-partition cost IR, >= 1
  AnyModel binary;
  OvrModel ovr;

  bool operator==(const FoldModel&) const = default;
};

/// Fits the full per-fold pipeline (standardize, profile, weight, train)
/// using only the listed rows. Rows outside train_rows are never read.
FoldModel train_fold(const Dataset& d, const std::vector<int>& train_rows,
                     const ExperimentPlan& plan, std::uint64_t fold_seed);

FoldMetrics evaluate_fold(const Dataset& d, const FoldModel& m,
                          const std::vector<int>& test_rows);

/// Runs the repeated stratified CV protocol. Fold seeds derive from
/// (plan.seed, "fold", repeat, fold); fold-level parallelism (plan.threads)
/// never changes the result.
ExperimentResult run_experiment(const ExperimentPlan& plan, const Dataset& d);

struct GridCell {
  std::vector<std::pair<std::string, double>> params;  // axis name -> resolved value
  CostSpec spec;
  FoldMetrics mean;
  FoldMetrics stdev;
};

struct GridSearchResult {
  GridSpec grid;
  double ir = 1.0;  // dataset IR the candidates were resolved against
  std::vector<GridCell> cells;
  std::size_t best_index = 0;
  ExperimentResult best;
};

/// Evaluates every cell with the same CV protocol (and folds) as
/// run_experiment, maximizing mean MCC; ties go to the higher mean G-mean,
/// then to the earlier cell. Candidates resolve against the full-dataset IR
/// and are floored at 1. Binary tasks only.
GridSearchResult grid_search(const ExperimentPlan& plan, const Dataset& d);

/// Two Gaussian clusters in 2-D (labels "majority"/"minority", unit
/// variance), means (1-overlap)*4 apart. Deterministic in seed.
Dataset make_synthetic(const std::string& generator, std::uint64_t seed, std::size_t n_majority,
                       std::size_t n_minority, double overlap);

}  // namespace icost
