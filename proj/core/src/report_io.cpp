#include "icost/report_io.hpp"

#include <cstdio>
#include <string>

#include "icost/error.hpp"
#include "json_util.hpp"

namespace icost {

using detail::get_or;
using detail::json;

namespace {

json plan_json(const ExperimentPlan& plan) {
  return json{{"dataset", plan.dataset_path},
              {"label", plan.label_column},
              {"positive", plan.positive},
              {"learner", detail::learner_to_json(plan.learner)},
              {"cost", detail::cost_to_json(plan.cost)},
              {"n_folds", plan.n_folds},
              {"n_repeats", plan.n_repeats},
              {"seed", plan.seed},
              {"threads", plan.threads},
              {"grid", plan.grid.has_value() ? detail::grid_to_json(*plan.grid) : json(nullptr)}};
}

}  // namespace

std::string plan_to_json(const ExperimentPlan& plan) { return plan_json(plan).dump(2) + "\n"; }

ExperimentPlan plan_from_json(const std::string& text) {
  json j = detail::parse_document(text, "plan");
  detail::reject_unknown(j,
                         {"dataset", "label", "positive", "learner", "cost", "n_folds",
                          "n_repeats", "seed", "threads", "grid"},
                         "plan");
  ExperimentPlan plan;
  plan.dataset_path = get_or<std::string>(j, "dataset", plan.dataset_path);
  plan.label_column = get_or<std::string>(j, "label", plan.label_column);
  plan.positive = get_or<std::string>(j, "positive", plan.positive);
  if (j.contains("learner") && !j.at("learner").is_null())
    plan.learner = detail::learner_from_json(j.at("learner"));
  if (j.contains("cost") && !j.at("cost").is_null())
    plan.cost = detail::cost_from_json(j.at("cost"));
  plan.n_folds = get_or(j, "n_folds", plan.n_folds);
  plan.n_repeats = get_or(j, "n_repeats", plan.n_repeats);
  plan.seed = get_or(j, "seed", plan.seed);
  plan.threads = get_or(j, "threads", plan.threads);
  if (j.contains("grid") && !j.at("grid").is_null())
    plan.grid = detail::grid_from_json(j.at("grid"), plan.cost.mode);
  return plan;
}

namespace {

json dataset_to_json(const DatasetSummary& d) {
  json j{{"path", d.path},
         {"n", d.n},
         {"dims", d.dims},
         {"n_classes", d.n_classes},
         {"labels", d.labels},
         {"class_counts", d.class_counts},
         {"multiclass", d.multiclass}};
  if (d.multiclass) {
    j["positive"] = nullptr;
    j["ir"] = nullptr;
  } else {
    j["positive"] = d.positive;
    j["ir"] = d.ir;
  }
  return j;
}

json folds_to_json(const std::vector<FoldOutcome>& folds) {
  json arr = json::array();
  for (const FoldOutcome& f : folds)
    arr.push_back(json{{"repeat", f.repeat},
                       {"fold", f.fold},
                       {"metrics", detail::metrics_to_json(f.metrics)}});
  return arr;
}

json experiment_to_json(const ExperimentResult& r) {
  return json{{"dataset", dataset_to_json(r.dataset)},
              {"plan", plan_json(r.plan)},
              {"folds", folds_to_json(r.folds)},
              {"summary", json{{"mean", detail::metrics_to_json(r.mean)},
                               {"stdev", detail::metrics_to_json(r.stdev)}}}};
}

void append_field(std::string& out, const std::string& field, bool first = false) {
  if (!first) out += ',';
  out += field;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string metric_header() {
  std::string h;
  for (const char* name : FoldMetrics::names()) {
    h += std::string(",") + name + "_mean";
    h += std::string(",") + name + "_stdev";
  }
  return h;
}

std::string metric_row(const FoldMetrics& mean, const FoldMetrics& stdev) {
  std::string row;
  auto m = mean.values();
  auto s = stdev.values();
  for (std::size_t i = 0; i < m.size(); ++i) {
    row += ',' + fmt(m[i]);
    row += ',' + fmt(s[i]);
  }
  return row;
}

std::string config_header() {
  return "dataset,learner,algorithm,type,n_folds,n_repeats,seed";
}

std::string config_row(const ExperimentPlan& plan) {
  std::string row;
  append_field(row, plan.dataset_path, true);
  append_field(row, learner_name(plan.learner.kind));
  append_field(row, cost_mode_name(plan.cost.mode));
  append_field(row, plan.cost.mode == CostMode::neighborhood
                        ? cost_scheme_name(plan.cost.scheme)
                        : "");
  append_field(row, std::to_string(plan.n_folds));
  append_field(row, std::to_string(plan.n_repeats));
  append_field(row, std::to_string(plan.seed));
  return row;
}

}  // namespace

std::string experiment_report_json(const ExperimentResult& result) {
  return experiment_to_json(result).dump(2) + "\n";
}

std::string experiment_summary_csv(const ExperimentResult& result) {
  std::string out = config_header() + metric_header() + "\n";
  out += config_row(result.plan) + metric_row(result.mean, result.stdev) + "\n";
  return out;
}

std::string grid_report_json(const GridSearchResult& result) {
  json cells = json::array();
  for (const GridCell& c : result.cells) {
    json params = json::object();
    for (const auto& [name, value] : c.params) params[name] = value;
    cells.push_back(json{{"params", params},
                         {"cost", detail::cost_to_json(c.spec)},
                         {"mean", detail::metrics_to_json(c.mean)},
                         {"stdev", detail::metrics_to_json(c.stdev)}});
  }
  json j{{"grid", detail::grid_to_json(result.grid)},
         {"ir", result.ir},
         {"cells", cells},
         {"best_index", result.best_index},
         {"best", experiment_to_json(result.best)}};
  return j.dump(2) + "\n";
}

std::string grid_summary_csv(const GridSearchResult& result) {
  std::string axes_header;
  for (const GridAxis& axis : result.grid.axes) axes_header += "," + axis.name;
  std::string out = config_header() + axes_header + ",selected" + metric_header() + "\n";
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    const GridCell& c = result.cells[i];
    std::string row = config_row(result.best.plan);
    for (const auto& [name, value] : c.params) row += ',' + fmt(value);
    row += i == result.best_index ? ",1" : ",0";
    row += metric_row(c.mean, c.stdev);
    out += row + "\n";
  }
  return out;
}

}  // namespace icost
