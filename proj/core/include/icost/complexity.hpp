#pragma once

#include <vector>

#include "icost/matrix.hpp"

namespace icost {

enum class Category { pure, safe, border };

const char* category_name(Category c);

/// Learning-difficulty category from the number of opposite-class instances
/// among the k nearest neighbours: 0 -> pure, 1..2 -> safe, >2 -> border.
Category categorize(int opposite_count);

struct NeighborhoodProfile {
  int instance_index = 0;
  int opposite_count = 0;   // in [0, k]
  Category category = Category::pure;
  int grade = 0;            // g<grade>, equals opposite_count

  bool operator==(const NeighborhoodProfile&) const = default;
};

/// One profile per minority instance (y == 1). Neighbours are found by
/// Euclidean distance over all other instances, self excluded, distance ties
/// broken by the lower index.
std::vector<NeighborhoodProfile> knn_profiles(const Matrix& features, const std::vector<int>& y,
                                              int k = 5);

struct MstEdge {
  int a = 0;  // a < b
  int b = 0;
  double weight = 0.0;

  bool operator==(const MstEdge&) const = default;
};

/// Minimum spanning tree over all instances under Euclidean edge weights.
/// Edges are sorted by (weight, a, b); total_weight sums them in that order.
struct MstEdgeList {
  std::vector<MstEdge> edges;
  double total_weight = 0.0;
};

MstEdgeList build_mst(const Matrix& features);

struct MstProfile {
  int instance_index = 0;
  bool linked = false;  // shares an MST edge with an opposite-class instance

  bool operator==(const MstProfile&) const = default;
};

/// One profile per minority instance (y == 1).
std::vector<MstProfile> mst_profiles(const MstEdgeList& mst, const std::vector<int>& y);

/// Majority instances that share an MST edge with a minority instance. Only
/// consulted when the optional majority down-weighting is enabled.
std::vector<int> linked_majority_indices(const MstEdgeList& mst, const std::vector<int>& y);

}  // namespace icost
