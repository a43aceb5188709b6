#pragma once

#include <string>

#include "icost/harness.hpp"

namespace icost {

/// Plan documents accept the same fields the CLI exposes; omitted fields keep
/// their defaults, unknown fields are rejected.
std::string plan_to_json(const ExperimentPlan& plan);
ExperimentPlan plan_from_json(const std::string& text);

/// Reports are timestamp-free: the same plan and seed give identical bytes.
std::string experiment_report_json(const ExperimentResult& result);
std::string experiment_summary_csv(const ExperimentResult& result);

std::string grid_report_json(const GridSearchResult& result);
std::string grid_summary_csv(const GridSearchResult& result);

}  // namespace icost
