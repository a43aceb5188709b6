#include "icost/multiclass.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "icost/error.hpp"
#include "icost/rng.hpp"

namespace icost {

OvrModel train_ovr(const Matrix& features, const std::vector<int>& y, int n_classes,
                   const LearnerConfig& learner, const CostSpec& cost, std::uint64_t seed) {
  if (n_classes < 3)
    fail(errc::too_few_classes,
         "one-vs-rest needs at least 3 classes; use the binary pipeline directly");
  if (y.size() != features.rows()) fail(errc::length_mismatch, "labels do not match feature rows");
  for (int label : y)
    if (label < 0 || label >= n_classes) fail(errc::bad_params, "label id outside 0..n_classes-1");

  OvrModel model;
  model.entries.resize(static_cast<std::size_t>(n_classes));
  for (int c = 0; c < n_classes; ++c) {
    auto& entry = model.entries[static_cast<std::size_t>(c)];
    entry.class_id = c;
    std::vector<int> binary(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      binary[i] = y[i] == c ? 1 : 0;
      (binary[i] == 1 ? entry.positives : entry.negatives) += 1;
    }
    if (entry.positives == 0)
      fail(errc::degenerate_labels, "class " + std::to_string(c) + ": no instances");
    entry.ir = static_cast<double>(entry.negatives) / static_cast<double>(entry.positives);
    entry.cost_ir = std::max(entry.ir, 1.0);
    try {
      ComplexityProfiles profiles = compute_profiles(cost, features, binary);
      WeightVector weights = assign_weights(cost, profiles, binary, entry.cost_ir);
      entry.model = train_model(learner, features, binary, weights,
                                derive_seed(seed, "ovr", static_cast<std::uint64_t>(c)));
    } catch (const Error& e) {
      fail(e.code(), "class " + std::to_string(c) + ": " + e.what());
    }
  }
  return model;
}

std::vector<double> ovr_scores(const OvrModel& m, std::span<const double> x) {
  std::vector<double> scores;
  scores.reserve(m.entries.size());
  for (const auto& entry : m.entries) scores.push_back(predict_score(entry.model, x));
  return scores;
}

int predict_ovr(const OvrModel& m, std::span<const double> x) {
  if (m.entries.empty()) fail(errc::bad_params, "one-vs-rest model has no classes");
  std::vector<double> scores = ovr_scores(m, x);
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c)
    if (scores[c] > scores[best]) best = c;
  return m.entries[best].class_id;
}

}  // namespace icost
