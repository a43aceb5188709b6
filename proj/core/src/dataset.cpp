#include "icost/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "icost/error.hpp"
#include "icost/rng.hpp"

namespace icost {

const char* errc_name(errc code) {
  switch (code) {
    case errc::file_not_found: return "FileNotFound";
    case errc::malformed_csv: return "MalformedCsv";
    case errc::too_many_missing: return "TooManyMissing";
    case errc::single_class: return "SingleClass";
    case errc::ambiguous_positive: return "AmbiguousPositive";
    case errc::class_too_small: return "ClassTooSmall";
    case errc::empty_row_set: return "EmptyRowSet";
    case errc::too_few_instances: return "TooFewInstances";
    case errc::not_binary: return "NotBinary";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::bad_arity: return "BadArity";
    case errc::non_positive_cost: return "NonPositiveCost";
    case errc::order_violation: return "OrderViolation";
    case errc::profile_mismatch: return "ProfileMismatch";
    case errc::non_finite: return "NonFinite";
    case errc::degenerate_labels: return "DegenerateLabels";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::too_few_classes: return "TooFewClasses";
    case errc::empty_fold: return "EmptyFold";
    case errc::bad_params: return "BadParams";
  }
  return "UnknownError";
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::optional<double> parse_double(const std::string& text) {
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace

Dataset make_dataset(Matrix features, std::vector<std::string> labels,
                     std::vector<std::string> feature_names, std::string label_column) {
  const std::size_t n = features.rows();
  if (n < 2) fail(errc::degenerate_input, "need at least 2 rows, got " + std::to_string(n));
  if (features.cols() < 1) fail(errc::degenerate_input, "need at least 1 feature column");
  if (labels.size() != n) fail(errc::length_mismatch, "labels do not match feature rows");

  std::map<std::string, int> ids;  // lexicographic label order -> dense ids
  for (const auto& l : labels) ids.emplace(l, 0);
  if (ids.size() < 2) fail(errc::single_class, "fewer than 2 distinct labels");
  int next = 0;
  for (auto& [name, id] : ids) id = next++;

  Dataset d;
  d.features = std::move(features);
  d.labels.reserve(n);
  d.class_counts.assign(ids.size(), 0);
  for (const auto& l : labels) {
    const int id = ids.at(l);
    d.labels.push_back(id);
    ++d.class_counts[static_cast<std::size_t>(id)];
  }
  d.label_names.resize(ids.size());
  for (const auto& [name, id] : ids) d.label_names[static_cast<std::size_t>(id)] = name;

  if (feature_names.empty()) {
    for (std::size_t j = 0; j < d.features.cols(); ++j) feature_names.push_back("f" + std::to_string(j));
  }
  if (feature_names.size() != d.features.cols())
    fail(errc::length_mismatch, "feature names do not match feature columns");
  d.feature_names = std::move(feature_names);
  d.label_column = std::move(label_column);
  return d;
}

Dataset load_csv(const std::filesystem::path& path, const std::string& label_column) {
  std::ifstream in(path);
  if (!in) fail(errc::file_not_found, path.string());

  std::string line;
  if (!std::getline(in, line)) fail(errc::malformed_csv, "empty file: " + path.string());
  const auto header = split_line(line);
  if (header.empty()) fail(errc::malformed_csv, "empty header row");

  std::size_t label_col = header.size() - 1;
  if (label_column != "last") {
    const auto it = std::find(header.begin(), header.end(), label_column);
    if (it == header.end())
      fail(errc::malformed_csv, "label column '" + label_column + "' not in header");
    label_col = static_cast<std::size_t>(it - header.begin());
  }
  if (header.size() < 2) fail(errc::malformed_csv, "need at least one feature column and a label column");

  std::vector<std::vector<std::optional<double>>> rows;  // features only, missing as nullopt
  std::vector<std::string> labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != header.size())
      fail(errc::malformed_csv, "row " + std::to_string(line_no) + " has " +
                                    std::to_string(cells.size()) + " cells, expected " +
                                    std::to_string(header.size()));
    std::vector<std::optional<double>> row;
    row.reserve(header.size() - 1);
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j == label_col) continue;
      row.push_back(parse_double(cells[j]));
    }
    if (cells[label_col].empty())
      fail(errc::malformed_csv, "row " + std::to_string(line_no) + " has an empty label");
    rows.push_back(std::move(row));
    labels.push_back(cells[label_col]);
  }
  if (rows.size() < 2) fail(errc::malformed_csv, "need at least 2 data rows");

  const std::size_t n = rows.size();
  const std::size_t dims = header.size() - 1;

  // Column means over present cells; any column over 5% missing is an error.
  std::vector<double> means(dims, 0.0);
  for (std::size_t j = 0; j < dims; ++j) {
    std::size_t present = 0;
    double sum = 0.0;
    for (const auto& row : rows) {
      if (row[j]) {
        sum += *row[j];
        ++present;
      }
    }
    const std::size_t missing = n - present;
    const std::size_t col_index = j < label_col ? j : j + 1;
    if (missing * 20 > n)  // strictly more than 5%
      fail(errc::too_many_missing, "column '" + header[col_index] + "' has " +
                                       std::to_string(missing) + "/" + std::to_string(n) +
                                       " missing or non-numeric cells");
    means[j] = sum / static_cast<double>(present);
  }

  Matrix features(n, dims);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < dims; ++j) features(i, j) = rows[i][j] ? *rows[i][j] : means[j];

  std::vector<std::string> feature_names;
  for (std::size_t j = 0; j < header.size(); ++j)
    if (j != label_col) feature_names.push_back(header[j]);

  return make_dataset(std::move(features), std::move(labels), std::move(feature_names),
                      header[label_col]);
}

std::string to_csv(const Dataset& d) {
  std::string out;
  for (const auto& name : d.feature_names) {
    out += name;
    out += ',';
  }
  out += d.label_column;
  out += '\n';
  char buf[64];
  for (std::size_t i = 0; i < d.n(); ++i) {
    for (std::size_t j = 0; j < d.dims(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", d.features(i, j));
      out += buf;
      out += ',';
    }
    out += d.label_names[static_cast<std::size_t>(d.labels[i])];
    out += '\n';
  }
  return out;
}

void save_csv(const Dataset& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(errc::file_not_found, "cannot open for writing: " + path.string());
  out << to_csv(d);
}

ImbalanceStats imbalance_stats(const Dataset& d, const std::string& positive) {
  ImbalanceStats stats;
  std::size_t pos_count = 0;
  std::size_t neg_count = 0;
  int pos_id = 0;
  int neg_id = 0;

  if (positive == "auto") {
    if (d.n_classes() != 2)
      fail(errc::ambiguous_positive,
           "positive=\"auto\" needs exactly 2 classes, got " + std::to_string(d.n_classes()));
    // Rarer class is the minority; ties resolve to the lexicographically
    // smaller label, which is id 0 by construction.
    pos_id = 0;
    neg_id = 1;
    pos_count = d.class_counts[0];
    neg_count = d.class_counts[1];
  } else {
    const auto it = std::find(d.label_names.begin(), d.label_names.end(), positive);
    if (it == d.label_names.end())
      fail(errc::bad_params, "positive label '" + positive + "' not present in data");
    pos_id = static_cast<int>(it - d.label_names.begin());
    pos_count = d.class_counts[static_cast<std::size_t>(pos_id)];
    neg_count = d.n() - pos_count;
    neg_id = d.n_classes() == 2 ? 1 - pos_id : ImbalanceStats::pooled_rest;
  }

  if (pos_count <= neg_count) {
    stats.minority_id = pos_id;
    stats.majority_id = neg_id;
    stats.ir = static_cast<double>(neg_count) / static_cast<double>(pos_count);
  } else {
    stats.minority_id = neg_id;
    stats.majority_id = pos_id;
    stats.ir = static_cast<double>(pos_count) / static_cast<double>(neg_count);
  }
  return stats;
}

std::vector<int> SplitPlan::test_rows(int repeat, int fold) const {
  const auto& a = assignments[static_cast<std::size_t>(repeat)];
  std::vector<int> rows;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == fold) rows.push_back(static_cast<int>(i));
  return rows;
}

std::vector<int> SplitPlan::train_rows(int repeat, int fold) const {
  const auto& a = assignments[static_cast<std::size_t>(repeat)];
  std::vector<int> rows;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != fold) rows.push_back(static_cast<int>(i));
  return rows;
}

SplitPlan make_split_plan(const Dataset& d, int n_folds, int n_repeats, std::uint64_t seed) {
  if (n_folds < 2) fail(errc::bad_params, "n_folds must be >= 2");
  if (n_repeats < 1) fail(errc::bad_params, "n_repeats must be >= 1");
  for (std::size_t c = 0; c < d.n_classes(); ++c) {
    if (d.class_counts[c] < static_cast<std::size_t>(n_folds))
      fail(errc::class_too_small, "class '" + d.label_names[c] + "' has " +
                                      std::to_string(d.class_counts[c]) + " members, fewer than " +
                                      std::to_string(n_folds) + " folds");
  }

  SplitPlan plan;
  plan.n_folds = n_folds;
  plan.n_repeats = n_repeats;
  plan.seed = seed;
  plan.assignments.resize(static_cast<std::size_t>(n_repeats));

  std::vector<std::vector<int>> by_class(d.n_classes());
  for (std::size_t i = 0; i < d.n(); ++i)
    by_class[static_cast<std::size_t>(d.labels[i])].push_back(static_cast<int>(i));

  for (int r = 0; r < n_repeats; ++r) {
    auto& folds = plan.assignments[static_cast<std::size_t>(r)];
    folds.assign(d.n(), 0);
    // Shuffle each class independently and deal round-robin; per-class fold
    // counts then differ by at most one.
    for (std::size_t c = 0; c < d.n_classes(); ++c) {
      Rng rng(derive_seed(seed, "split", static_cast<std::uint64_t>(r), c));
      auto members = by_class[c];
      rng.shuffle(members);
      for (std::size_t m = 0; m < members.size(); ++m)
        folds[static_cast<std::size_t>(members[m])] = static_cast<int>(m % static_cast<std::size_t>(n_folds));
    }
  }
  return plan;
}

Standardizer fit_standardizer(const Matrix& features, const std::vector<int>& rows) {
  if (rows.empty()) fail(errc::empty_row_set, "cannot fit a standardizer on zero rows");
  const std::size_t dims = features.cols();
  const double n = static_cast<double>(rows.size());
  Standardizer s;
  s.means.assign(dims, 0.0);
  s.stdevs.assign(dims, 1.0);
  for (std::size_t j = 0; j < dims; ++j) {
    double sum = 0.0;
    for (int i : rows) sum += features(static_cast<std::size_t>(i), j);
    s.means[j] = sum / n;
  }
  for (std::size_t j = 0; j < dims; ++j) {
    double ss = 0.0;
    for (int i : rows) {
      const double dev = features(static_cast<std::size_t>(i), j) - s.means[j];
      ss += dev * dev;
    }
    const double var = ss / n;  // population variance
    s.stdevs[j] = var > 0.0 ? std::sqrt(var) : 1.0;
  }
  return s;
}

Standardizer fit_standardizer(const Dataset& d, const std::vector<int>& rows) {
  return fit_standardizer(d.features, rows);
}

Matrix transform(const Standardizer& s, const Matrix& features, const std::vector<int>& rows) {
  Matrix out(rows.size(), features.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto src = features.row(static_cast<std::size_t>(rows[r]));
    for (std::size_t j = 0; j < features.cols(); ++j)
      out(r, j) = (src[j] - s.means[j]) / s.stdevs[j];
  }
  return out;
}

std::vector<double> transform_row(const Standardizer& s, std::span<const double> x) {
  if (x.size() != s.means.size())
    fail(errc::dimension_mismatch, "row has " + std::to_string(x.size()) + " features, expected " +
                                       std::to_string(s.means.size()));
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = (x[j] - s.means[j]) / s.stdevs[j];
  return out;
}

std::vector<int> binarize(const std::vector<int>& labels, int positive_id) {
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = labels[i] == positive_id ? 1 : 0;
  return out;
}

}  // namespace icost
