#include "icost/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "icost/error.hpp"

namespace icost {

const char* category_name(Category c) {
  switch (c) {
    case Category::pure: return "pure";
    case Category::safe: return "safe";
    case Category::border: return "border";
  }
  return "?";
}

Category categorize(int opposite_count) {
  if (opposite_count == 0) return Category::pure;
  if (opposite_count <= 2) return Category::safe;
  return Category::border;
}

std::vector<NeighborhoodProfile> knn_profiles(const Matrix& features, const std::vector<int>& y,
                                              int k) {
  const std::size_t n = features.rows();
  if (y.size() != n) fail(errc::length_mismatch, "labels do not match feature rows");
  if (k < 1) fail(errc::bad_params, "n_neighbors must be >= 1");
  if (n < static_cast<std::size_t>(k) + 1)
    fail(errc::too_few_instances, "need at least k+1 instances for k nearest neighbours");
  bool seen[2] = {false, false};
  for (int label : y) {
    if (label != 0 && label != 1) fail(errc::not_binary, "labels must be 0/1");
    seen[label] = true;
  }
  if (!seen[0] || !seen[1]) fail(errc::not_binary, "need both classes present");

  std::vector<NeighborhoodProfile> out;
  std::vector<std::pair<double, int>> dist;  // (squared distance, index)
  dist.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] != 1) continue;
    dist.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      dist.emplace_back(squared_distance(features.row(i), features.row(j)),
                        static_cast<int>(j));
    }
    // Ties in distance go to the lower index; pair ordering gives exactly that.
    std::nth_element(dist.begin(), dist.begin() + (k - 1), dist.end());
    int opposite = 0;
    for (int j = 0; j < k; ++j)
      if (y[static_cast<std::size_t>(dist[static_cast<std::size_t>(j)].second)] == 0) ++opposite;
    NeighborhoodProfile p;
    p.instance_index = static_cast<int>(i);
    p.opposite_count = opposite;
    p.category = categorize(opposite);
    p.grade = opposite;
    out.push_back(p);
  }
  return out;
}

MstEdgeList build_mst(const Matrix& features) {
  const std::size_t n = features.rows();
  if (n < 2) fail(errc::degenerate_input, "minimum spanning tree needs at least 2 instances");

  // Prim over the dense Euclidean graph. Squared distances order the same as
  // real ones (sqrt is monotone), so candidate selection may compare squares.
  std::vector<char> in_tree(n, 0);
  std::vector<double> best_sq(n, 0.0);
  std::vector<int> best_from(n, 0);
  for (std::size_t j = 1; j < n; ++j)
    best_sq[j] = squared_distance(features.row(0), features.row(j));
  in_tree[0] = 1;

  MstEdgeList mst;
  mst.edges.reserve(n - 1);
  for (std::size_t step = 1; step < n; ++step) {
    int pick = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      if (pick < 0 || best_sq[j] < best_sq[static_cast<std::size_t>(pick)])
        pick = static_cast<int>(j);
    }
    const auto p = static_cast<std::size_t>(pick);
    int a = std::min(best_from[p], pick);
    int b = std::max(best_from[p], pick);
    mst.edges.push_back({a, b, std::sqrt(best_sq[p])});
    in_tree[p] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      double sq = squared_distance(features.row(p), features.row(j));
      if (sq < best_sq[j]) {
        best_sq[j] = sq;
        best_from[j] = pick;
      }
    }
  }

  std::sort(mst.edges.begin(), mst.edges.end(), [](const MstEdge& l, const MstEdge& r) {
    if (l.weight != r.weight) return l.weight < r.weight;
    if (l.a != r.a) return l.a < r.a;
    return l.b < r.b;
  });
  double total = 0.0;
  for (const MstEdge& e : mst.edges) total += e.weight;
  mst.total_weight = total;
  return mst;
}

std::vector<MstProfile> mst_profiles(const MstEdgeList& mst, const std::vector<int>& y) {
  for (int label : y)
    if (label != 0 && label != 1) fail(errc::not_binary, "labels must be 0/1");
  std::vector<char> linked(y.size(), 0);
  for (const MstEdge& e : mst.edges) {
    const auto a = static_cast<std::size_t>(e.a);
    const auto b = static_cast<std::size_t>(e.b);
    if (a >= y.size() || b >= y.size())
      fail(errc::length_mismatch, "edge index outside label range");
    if (y[a] != y[b]) {
      linked[a] = 1;
      linked[b] = 1;
    }
  }
  std::vector<MstProfile> out;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] == 1) out.push_back({static_cast<int>(i), linked[i] != 0});
  return out;
}

std::vector<int> linked_majority_indices(const MstEdgeList& mst, const std::vector<int>& y) {
  std::vector<char> linked(y.size(), 0);
  for (const MstEdge& e : mst.edges) {
    const auto a = static_cast<std::size_t>(e.a);
    const auto b = static_cast<std::size_t>(e.b);
    if (a >= y.size() || b >= y.size())
      fail(errc::length_mismatch, "edge index outside label range");
    if (y[a] != y[b]) {
      linked[a] = 1;
      linked[b] = 1;
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] == 0 && linked[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace icost
