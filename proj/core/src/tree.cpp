#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "icost/error.hpp"
#include "icost/learners.hpp"
#include "icost/rng.hpp"
#include "tree_builder.hpp"

namespace icost {

namespace detail {

namespace {

double gini(double w0, double w1) {
  double total = w0 + w1;
  if (total <= 0.0) return 0.0;
  double p0 = w0 / total;
  double p1 = w1 / total;
  return 1.0 - p0 * p0 - p1 * p1;
}

struct Split {
  bool found = false;
  double impurity = 0.0;  // weighted child impurity
  int feature = 0;
  double threshold = 0.0;
};

}  // namespace

int TreeBuilder::build(std::vector<int>& rows, int depth) {
  double w0 = 0.0, w1 = 0.0;
  for (int r : rows) {
    const auto i = static_cast<std::size_t>(r);
    (y[i] == 1 ? w1 : w0) += weights[i];
  }

  bool stop = w0 == 0.0 || w1 == 0.0 ||
              rows.size() < static_cast<std::size_t>(min_samples_split) ||
              (max_depth >= 0 && depth >= max_depth);

  Split best;
  if (!stop) {
    std::vector<int> candidates;
    const int d = static_cast<int>(X.cols());
    if (rng != nullptr && features_per_split < d) {
      // Partial Fisher-Yates; candidates sorted so ties still favour the
      // lowest feature index.
      std::vector<int> pool(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) pool[static_cast<std::size_t>(j)] = j;
      for (int j = 0; j < features_per_split; ++j) {
        auto pick = static_cast<std::size_t>(j) +
                    rng->below(static_cast<std::uint64_t>(d - j));
        std::swap(pool[static_cast<std::size_t>(j)], pool[pick]);
      }
      candidates.assign(pool.begin(), pool.begin() + features_per_split);
      std::sort(candidates.begin(), candidates.end());
    } else {
      candidates.resize(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) candidates[static_cast<std::size_t>(j)] = j;
    }

    const double total = w0 + w1;
    std::vector<std::pair<double, int>> ordered;  // (value, row)
    ordered.reserve(rows.size());
    for (int f : candidates) {
      ordered.clear();
      for (int r : rows)
        ordered.emplace_back(X(static_cast<std::size_t>(r), static_cast<std::size_t>(f)), r);
      std::sort(ordered.begin(), ordered.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      double lw0 = 0.0, lw1 = 0.0;
      for (std::size_t i = 0; i + 1 < ordered.size(); ++i) {
        const auto r = static_cast<std::size_t>(ordered[i].second);
        (y[r] == 1 ? lw1 : lw0) += weights[r];
        if (ordered[i].first == ordered[i + 1].first) continue;
        double threshold = ordered[i].first + 0.5 * (ordered[i + 1].first - ordered[i].first);
        double impurity =
            ((lw0 + lw1) * gini(lw0, lw1) + (total - lw0 - lw1) * gini(w0 - lw0, w1 - lw1)) /
            total;
        bool better = !best.found || impurity < best.impurity ||
                      (impurity == best.impurity &&
                       (f < best.feature || (f == best.feature && threshold < best.threshold)));
        if (better) best = {true, impurity, f, threshold};
      }
    }
  }

  const int index = static_cast<int>(nodes.size());
  nodes.emplace_back();
  if (!best.found) {
    nodes[static_cast<std::size_t>(index)].leaf_weight = {w0, w1};
    return index;
  }

  std::vector<int> left, right;
  for (int r : rows) {
    double v = X(static_cast<std::size_t>(r), static_cast<std::size_t>(best.feature));
    (v <= best.threshold ? left : right).push_back(r);
  }
  rows.clear();
  rows.shrink_to_fit();
  int left_index = build(left, depth + 1);
  int right_index = build(right, depth + 1);
  TreeNode& node = nodes[static_cast<std::size_t>(index)];
  node.feature = best.feature;
  node.threshold = best.threshold;
  node.left = left_index;
  node.right = right_index;
  return index;
}

TreeModel build_tree(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                     std::vector<int> rows, int min_samples_split, int max_depth,
                     int features_per_split, Rng* rng) {
  TreeBuilder builder{X, y, weights, min_samples_split, max_depth, features_per_split, rng, {}};
  builder.build(rows, 0);
  TreeModel m;
  m.nodes = std::move(builder.nodes);
  m.min_samples_split = min_samples_split;
  m.max_depth = max_depth;
  return m;
}

}  // namespace detail

TreeModel train_tree(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                     int min_samples_split, int max_depth) {
  if (weights.empty())
    return train_tree(X, y, WeightVector(X.rows(), 1.0), min_samples_split, max_depth);
  if (y.size() != X.rows() || weights.size() != X.rows())
    fail(errc::length_mismatch, "labels/weights do not match feature rows");
  if (X.rows() < 2) fail(errc::degenerate_input, "need at least 2 instances");
  if (X.cols() < 1) fail(errc::degenerate_input, "need at least 1 feature");
  if (min_samples_split < 2) fail(errc::bad_params, "min_samples_split must be >= 2");
  bool has0 = false, has1 = false;
  for (int label : y) {
    if (label == 0) has0 = true;
    else if (label == 1) has1 = true;
    else fail(errc::not_binary, "labels must be 0/1");
  }
  if (!has0 || !has1) fail(errc::degenerate_labels, "training data must contain both classes");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w)) fail(errc::non_positive_cost, "weights must be positive");

  std::vector<int> rows(X.rows());
  for (std::size_t i = 0; i < X.rows(); ++i) rows[i] = static_cast<int>(i);
  return detail::build_tree(X, y, weights, std::move(rows), min_samples_split, max_depth,
                            static_cast<int>(X.cols()), nullptr);
}

double predict_score(const TreeModel& m, std::span<const double> x) {
  const TreeNode* node = &m.nodes.at(0);
  while (node->feature >= 0) {
    if (static_cast<std::size_t>(node->feature) >= x.size())
      fail(errc::dimension_mismatch, "feature length too short for tree");
    int next = x[static_cast<std::size_t>(node->feature)] <= node->threshold ? node->left
                                                                             : node->right;
    node = &m.nodes.at(static_cast<std::size_t>(next));
  }
  return node->leaf_weight[1] / (node->leaf_weight[0] + node->leaf_weight[1]);
}

}  // namespace icost
