#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "icost/costing.hpp"
#include "icost/learners.hpp"
#include "icost/matrix.hpp"

namespace icost {

/// One-vs-rest decomposition. Class ids are lexicographic label ranks
/// (Dataset order), so the smaller id is the lexicographically smaller label.
struct OvrModel {
  struct Entry {
    int class_id = 0;
    std::int64_t positives = 0;
    std::int64_t negatives = 0;
    double ir = 1.0;       // negatives / positives
    double cost_ir = 1.0;  // max(ir, 1), what costing uses
    AnyModel model;

    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;

  bool operator==(const OvrModel&) const = default;
};

/// Trains one binary pipeline per class on the same feature rows: binarize,
/// recompute IR and complexity profiles, assign weights, fit. Per-class seeds
/// derive from (seed, "ovr", class id), so each subproblem is independent of
/// the others.
OvrModel train_ovr(const Matrix& features, const std::vector<int>& y, int n_classes,
                   const LearnerConfig& learner, const CostSpec& cost, std::uint64_t seed);

std::vector<double> ovr_scores(const OvrModel& m, std::span<const double> x);

/// Argmax of per-class scores; exact ties go to the smaller class id.
int predict_ovr(const OvrModel& m, std::span<const double> x);

}  // namespace icost
