#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace icost {

struct ConfusionTally {
  std::int64_t tp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;
  std::int64_t fp = 0;

  bool operator==(const ConfusionTally&) const = default;
};

/// y values: 1 = positive, 0 = negative.
ConfusionTally tally_predictions(const std::vector<int>& y_true, const std::vector<int>& y_pred);

/// The eight evaluation metrics of one fold (or one macro average).
struct FoldMetrics {
  double mcc = 0.0;
  double roc_auc = 0.0;
  double gmean = 0.0;
  double f1 = 0.0;
  double sensitivity = 0.0;
  double specificity = 0.0;
  double precision = 0.0;
  double accuracy = 0.0;

  bool operator==(const FoldMetrics&) const = default;

  static constexpr std::size_t count = 8;
  std::array<double, count> values() const;
  static const std::array<const char*, count>& names();
  static FoldMetrics from_values(const std::array<double, count>& v);
};

/// Zero-division conventions: precision/f1 0/0 -> 0; any zero factor in the
/// MCC denominator -> 0; ROC-AUC with an empty side -> 0.5, score ties get
/// average ranks. scores pairs are (score, true label).
FoldMetrics binary_metrics(const ConfusionTally& tally,
                           const std::vector<std::pair<double, int>>& scores);

/// One one-vs-rest evaluation per class.
struct ClassEval {
  ConfusionTally tally;
  std::vector<std::pair<double, int>> scores;
};

/// Unweighted mean of the per-class one-vs-rest binary metrics.
FoldMetrics macro_metrics(const std::vector<ClassEval>& per_class);

struct MetricsReport {
  std::vector<FoldMetrics> folds;
  FoldMetrics mean;
  FoldMetrics stdev;  // sample standard deviation (0 for a single fold)
};

MetricsReport aggregate_folds(const std::vector<FoldMetrics>& folds);

}  // namespace icost
