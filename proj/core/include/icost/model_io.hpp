#pragma once

#include <span>
#include <string>
#include <vector>

#include "icost/costing.hpp"
#include "icost/dataset.hpp"
#include "icost/harness.hpp"
#include "icost/learners.hpp"
#include "icost/multiclass.hpp"

namespace icost {

/// A fitted pipeline plus everything needed to apply it to raw CSV rows.
struct PipelineModel {
  Standardizer standardizer;
  std::vector<std::string> labels;  // class id -> name
  std::vector<std::string> feature_names;
  std::string label_column;
  bool multiclass = false;
  int positive_id = 1;
  int negative_id = 0;  // ImbalanceStats::pooled_rest when the rest is pooled
  double ir = 1.0;      // cost IR the weights were resolved against
  LearnerConfig learner;
  CostSpec cost;
  AnyModel binary;
  OvrModel ovr;

  bool operator==(const PipelineModel&) const = default;
};

PipelineModel make_pipeline_model(const Dataset& d, const FoldModel& fitted,
                                  const ExperimentPlan& plan);

/// Versioned JSON document ("icost-model", version 1). All parameters
/// round-trip exactly.
std::string model_to_json(const PipelineModel& m);
PipelineModel model_from_json(const std::string& text);

struct Prediction {
  std::string label;
  double score = 0.0;  // binary: positive-class score; ovr: winning score
};

/// Applies the stored standardizer and model to one raw feature row.
Prediction predict_row(const PipelineModel& m, std::span<const double> raw);

}  // namespace icost
