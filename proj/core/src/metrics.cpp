#include "icost/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "icost/error.hpp"

namespace icost {

ConfusionTally tally_predictions(const std::vector<int>& y_true, const std::vector<int>& y_pred) {
  if (y_true.size() != y_pred.size())
    fail(errc::length_mismatch, "prediction count does not match label count");
  ConfusionTally t;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i] == 1)
      (y_pred[i] == 1 ? t.tp : t.fn) += 1;
    else
      (y_pred[i] == 1 ? t.fp : t.tn) += 1;
  }
  return t;
}

std::array<double, FoldMetrics::count> FoldMetrics::values() const {
  return {mcc, roc_auc, gmean, f1, sensitivity, specificity, precision, accuracy};
}

const std::array<const char*, FoldMetrics::count>& FoldMetrics::names() {
  static const std::array<const char*, count> n = {
      "mcc", "roc_auc", "gmean", "f1", "sensitivity", "specificity", "precision", "accuracy"};
  return n;
}

FoldMetrics FoldMetrics::from_values(const std::array<double, count>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

namespace {

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

// Mann-Whitney statistic: mean positive rank against all negatives, ties
// counted half. Either side empty -> 0.5.
double rank_auc(const std::vector<std::pair<double, int>>& scores) {
  std::vector<double> sorted_scores;
  sorted_scores.reserve(scores.size());
  std::size_t n_pos = 0;
  for (const auto& [score, label] : scores) {
    sorted_scores.push_back(score);
    if (label == 1) ++n_pos;
  }
  const std::size_t n_neg = scores.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) return 0.5;
  std::sort(sorted_scores.begin(), sorted_scores.end());

  // Average rank (1-based) per distinct score via binary search.
  double pos_rank_sum = 0.0;
  for (const auto& [score, label] : scores) {
    if (label != 1) continue;
    auto lo = std::lower_bound(sorted_scores.begin(), sorted_scores.end(), score);
    auto hi = std::upper_bound(lo, sorted_scores.end(), score);
    double first = static_cast<double>(lo - sorted_scores.begin()) + 1.0;
    double last = static_cast<double>(hi - sorted_scores.begin());
    pos_rank_sum += 0.5 * (first + last);
  }
  double u = pos_rank_sum - 0.5 * static_cast<double>(n_pos) * (static_cast<double>(n_pos) + 1.0);
  return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

}  // namespace

FoldMetrics binary_metrics(const ConfusionTally& tally,
                           const std::vector<std::pair<double, int>>& scores) {
  const double tp = static_cast<double>(tally.tp);
  const double fn = static_cast<double>(tally.fn);
  const double tn = static_cast<double>(tally.tn);
  const double fp = static_cast<double>(tally.fp);
  if (tally.tp < 0 || tally.fn < 0 || tally.tn < 0 || tally.fp < 0)
    fail(errc::bad_params, "negative confusion counts");
  if (tp + fn + tn + fp == 0.0) fail(errc::empty_fold, "empty evaluation fold");

  FoldMetrics m;
  m.sensitivity = ratio(tp, tp + fn);
  m.specificity = ratio(tn, tn + fp);
  m.precision = ratio(tp, tp + fp);
  m.f1 = ratio(2.0 * tp, 2.0 * tp + fp + fn);
  m.gmean = std::sqrt(m.sensitivity * m.specificity);
  m.accuracy = (tp + tn) / (tp + fn + tn + fp);
  double denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
  m.mcc = denom == 0.0 ? 0.0 : (tp * tn - fp * fn) / std::sqrt(denom);
  m.roc_auc = rank_auc(scores);
  return m;
}

FoldMetrics macro_metrics(const std::vector<ClassEval>& per_class) {
  if (per_class.size() < 2) fail(errc::empty_fold, "macro averaging needs at least 2 classes");
  std::array<double, FoldMetrics::count> sum{};
  for (const ClassEval& c : per_class) {
    auto v = binary_metrics(c.tally, c.scores).values();
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
  }
  for (double& s : sum) s /= static_cast<double>(per_class.size());
  return FoldMetrics::from_values(sum);
}

MetricsReport aggregate_folds(const std::vector<FoldMetrics>& folds) {
  if (folds.empty()) fail(errc::empty_fold, "no folds to aggregate");
  MetricsReport report;
  report.folds = folds;
  std::array<double, FoldMetrics::count> mean{};
  for (const FoldMetrics& f : folds) {
    auto v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i) mean[i] += v[i];
  }
  for (double& m : mean) m /= static_cast<double>(folds.size());
  std::array<double, FoldMetrics::count> var{};
  if (folds.size() > 1) {
    for (const FoldMetrics& f : folds) {
      auto v = f.values();
      for (std::size_t i = 0; i < v.size(); ++i) {
        double d = v[i] - mean[i];
        var[i] += d * d;
      }
    }
    for (double& s : var) s = std::sqrt(s / static_cast<double>(folds.size() - 1));
  }
  report.mean = FoldMetrics::from_values(mean);
  report.stdev = FoldMetrics::from_values(var);
  return report;
}

}  // namespace icost
