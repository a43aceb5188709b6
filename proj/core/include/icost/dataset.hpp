#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "icost/matrix.hpp"

namespace icost {

/// Immutable tabular classification data. Label strings are mapped to dense
/// integer ids in lexicographic order of the label text.
struct Dataset {
  Matrix features;                        // N x D
  std::vector<int> labels;                // length N, dense class ids
  std::vector<std::string> label_names;   // id -> original label string
  std::vector<std::size_t> class_counts;  // per class id, sums to N
  std::vector<std::string> feature_names; // length D
  std::string label_column = "class";

  std::size_t n() const { return features.rows(); }
  std::size_t dims() const { return features.cols(); }
  std::size_t n_classes() const { return label_names.size(); }
};

/// Build a Dataset from in-memory rows; applies the same validation and
/// label-id assignment as load_csv.
Dataset make_dataset(Matrix features, std::vector<std::string> labels,
                     std::vector<std::string> feature_names = {},
                     std::string label_column = "class");

/// Load a comma-separated file with a mandatory header row. label_column
/// selects the class column by name; "last" means the rightmost column.
/// Unparseable or empty feature cells are mean-imputed per column when the
/// column's missing fraction is at most 5%, otherwise the load fails.
Dataset load_csv(const std::filesystem::path& path, const std::string& label_column = "last");

/// Write the dataset back out. Finite doubles are printed with 17 significant
/// digits so a reload reproduces them bitwise.
void save_csv(const Dataset& d, const std::filesystem::path& path);
std::string to_csv(const Dataset& d);

struct ImbalanceStats {
  static constexpr int pooled_rest = -1;  // id used when several classes are pooled as negative
  int majority_id = 0;
  int minority_id = 0;
  double ir = 1.0;  // majority count / minority count, >= 1
};

/// Imbalance ratio of a binary view of the data. positive == "auto" requires
/// exactly two classes; naming a positive class pools the remaining classes
/// as the negative side (id pooled_rest).
ImbalanceStats imbalance_stats(const Dataset& d, const std::string& positive = "auto");

/// Repeated stratified fold assignment. assignments[r][i] is the fold of
/// instance i in repeat r.
struct SplitPlan {
  int n_folds = 5;
  int n_repeats = 10;
  std::uint64_t seed = 0;
  std::vector<std::vector<int>> assignments;

  std::vector<int> test_rows(int repeat, int fold) const;
  std::vector<int> train_rows(int repeat, int fold) const;
};

SplitPlan make_split_plan(const Dataset& d, int n_folds, int n_repeats, std::uint64_t seed);

/// Per-feature z-score parameters fitted on a training row subset. Zero
/// variance features keep stdev 1 so their transform is exactly centering.
struct Standardizer {
  std::vector<double> means;
  std::vector<double> stdevs;

  bool operator==(const Standardizer&) const = default;
};

Standardizer fit_standardizer(const Matrix& features, const std::vector<int>& rows);
Standardizer fit_standardizer(const Dataset& d, const std::vector<int>& rows);

Matrix transform(const Standardizer& s, const Matrix& features, const std::vector<int>& rows);
std::vector<double> transform_row(const Standardizer& s, std::span<const double> x);

/// 1 where labels[i] == positive_id, else 0.
std::vector<int> binarize(const std::vector<int>& labels, int positive_id);

}  // namespace icost
