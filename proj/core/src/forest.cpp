#include <cmath>
#include <cstddef>

#include "icost/error.hpp"
#include "icost/learners.hpp"
#include "icost/rng.hpp"
#include "tree_builder.hpp"

namespace icost {

ForestModel train_forest(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                         int n_trees, std::uint64_t seed, int min_samples_split, int max_depth,
                         bool bootstrap) {
  if (weights.empty())
    return train_forest(X, y, WeightVector(X.rows(), 1.0), n_trees, seed, min_samples_split,
                        max_depth, bootstrap);
  if (y.size() != X.rows() || weights.size() != X.rows())
    fail(errc::length_mismatch, "labels/weights do not match feature rows");
  if (X.rows() < 2) fail(errc::degenerate_input, "need at least 2 instances");
  if (X.cols() < 1) fail(errc::degenerate_input, "need at least 1 feature");
  if (n_trees < 1) fail(errc::bad_params, "n_trees must be >= 1");
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

  const std::size_t n = X.rows();
  const int d = static_cast<int>(X.cols());
  const int features_per_split =
      bootstrap ? static_cast<int>(std::ceil(std::sqrt(static_cast<double>(d)))) : d;

  ForestModel forest;
  forest.n_trees = n_trees;
  forest.features_per_split = features_per_split;
  forest.seed = seed;
  forest.trees.reserve(static_cast<std::size_t>(n_trees));
  for (int t = 0; t < n_trees; ++t) {
    Rng rng(derive_seed(seed, "tree", static_cast<std::uint64_t>(t)));
    std::vector<int> rows(n);
    if (bootstrap) {
      for (std::size_t i = 0; i < n; ++i)
        rows[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    } else {
      for (std::size_t i = 0; i < n; ++i) rows[i] = static_cast<int>(i);
    }
    forest.trees.push_back(detail::build_tree(X, y, weights, std::move(rows), min_samples_split,
                                              max_depth, features_per_split, &rng));
  }
  return forest;
}

double predict_score(const ForestModel& m, std::span<const double> x) {
  if (m.trees.empty()) fail(errc::bad_params, "forest has no trees");
  double sum = 0.0;
  for (const TreeModel& tree : m.trees) sum += predict_score(tree, x);
  return sum / static_cast<double>(m.trees.size());
}

}  // namespace icost
