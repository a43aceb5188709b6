#pragma once

#include <vector>

#include "icost/learners.hpp"
#include "icost/rng.hpp"

namespace icost::detail {

/// Shared CART core. rng == nullptr (or features_per_split >= D) considers
/// every feature at every split; otherwise a fresh random subset per node.
struct TreeBuilder {
  const Matrix& X;
  const std::vector<int>& y;
  const WeightVector& weights;
  int min_samples_split;
  int max_depth;
  int features_per_split;
  Rng* rng;
  std::vector<TreeNode> nodes;

  int build(std::vector<int>& rows, int depth);
};

/// rows may repeat (bootstrap samples keep their original weights).
TreeModel build_tree(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                     std::vector<int> rows, int min_samples_split, int max_depth,
                     int features_per_split, Rng* rng);

}  // namespace icost::detail
