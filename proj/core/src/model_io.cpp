#include "icost/model_io.hpp"

#include <cstddef>

#include "icost/error.hpp"
#include "json_util.hpp"

namespace icost {

using detail::get_as;
using detail::get_or;
using detail::json;

namespace {

json tree_to_json(const TreeModel& t) {
  json nodes = json::array();
  for (const TreeNode& n : t.nodes) {
    if (n.feature >= 0)
      nodes.push_back(json{{"feature", n.feature},
                           {"threshold", n.threshold},
                           {"left", n.left},
                           {"right", n.right}});
    else
      nodes.push_back(json{{"leaf_weight", n.leaf_weight}});
  }
  return json{{"kind", "tree"},
              {"min_samples_split", t.min_samples_split},
              {"max_depth", t.max_depth},
              {"nodes", nodes}};
}

TreeModel tree_from_json(const json& j) {
  TreeModel t;
  t.min_samples_split = get_as<int>(j, "min_samples_split");
  t.max_depth = get_as<int>(j, "max_depth");
  for (const json& nj : j.at("nodes")) {
    TreeNode n;
    if (nj.contains("feature")) {
      n.feature = get_as<int>(nj, "feature");
      n.threshold = get_as<double>(nj, "threshold");
      n.left = get_as<int>(nj, "left");
      n.right = get_as<int>(nj, "right");
    } else {
      n.leaf_weight = get_as<std::array<double, 2>>(nj, "leaf_weight");
    }
    t.nodes.push_back(n);
  }
  if (t.nodes.empty()) fail(errc::bad_params, "tree model has no nodes");
  return t;
}

json any_model_to_json(const AnyModel& m) {
  if (const auto* lr = std::get_if<LogRegModel>(&m)) {
    return json{{"kind", "logreg"},
                {"coefficients", lr->coefficients},
                {"intercept", lr->intercept},
                {"l2", lr->l2},
                {"iterations_run", lr->iterations_run},
                {"final_loss", lr->final_loss}};
  }
  if (const auto* svm = std::get_if<LinearSvmModel>(&m)) {
    return json{{"kind", "svm"}, {"w", svm->w}, {"b", svm->b}, {"lambda", svm->lambda}};
  }
  if (const auto* tree = std::get_if<TreeModel>(&m)) return tree_to_json(*tree);
  const auto& forest = std::get<ForestModel>(m);
  json trees = json::array();
  for (const TreeModel& t : forest.trees) trees.push_back(tree_to_json(t));
  return json{{"kind", "forest"},
              {"n_trees", forest.n_trees},
              {"features_per_split", forest.features_per_split},
              {"seed", forest.seed},
              {"trees", trees}};
}

AnyModel any_model_from_json(const json& j) {
  const std::string kind = get_as<std::string>(j, "kind");
  if (kind == "logreg") {
    LogRegModel m;
    m.coefficients = get_as<std::vector<double>>(j, "coefficients");
    m.intercept = get_as<double>(j, "intercept");
    m.l2 = get_as<double>(j, "l2");
    m.iterations_run = get_as<int>(j, "iterations_run");
    m.final_loss = get_as<double>(j, "final_loss");
    return m;
  }
  if (kind == "svm") {
    LinearSvmModel m;
    m.w = get_as<std::vector<double>>(j, "w");
    m.b = get_as<double>(j, "b");
    m.lambda = get_as<double>(j, "lambda");
    return m;
  }
  if (kind == "tree") return tree_from_json(j);
  if (kind == "forest") {
    ForestModel m;
    m.n_trees = get_as<int>(j, "n_trees");
    m.features_per_split = get_as<int>(j, "features_per_split");
    m.seed = get_as<std::uint64_t>(j, "seed");
    for (const json& tj : j.at("trees")) m.trees.push_back(tree_from_json(tj));
    return m;
  }
  fail(errc::bad_params, "unknown model kind '" + kind + "'");
}

}  // namespace

PipelineModel make_pipeline_model(const Dataset& d, const FoldModel& fitted,
                                  const ExperimentPlan& plan) {
  PipelineModel m;
  m.standardizer = fitted.standardizer;
  m.labels = d.label_names;
  m.feature_names = d.feature_names;
  m.label_column = d.label_column;
  m.multiclass = fitted.multiclass;
  m.positive_id = fitted.positive_id;
  m.negative_id = fitted.negative_id;
  m.ir = fitted.ir;
  m.learner = plan.learner;
  m.cost = plan.cost;
  m.binary = fitted.binary;
  m.ovr = fitted.ovr;
  return m;
}

std::string model_to_json(const PipelineModel& m) {
  json j{{"format", "icost-model"},
         {"version", 1},
         {"label_column", m.label_column},
         {"labels", m.labels},
         {"feature_names", m.feature_names},
         {"standardizer", json{{"means", m.standardizer.means}, {"stdevs", m.standardizer.stdevs}}},
         {"task", m.multiclass ? "ovr" : "binary"},
         {"positive_id", m.positive_id},
         {"negative_id", m.negative_id},
         {"ir", m.ir},
         {"learner", detail::learner_to_json(m.learner)},
         {"cost", detail::cost_to_json(m.cost)}};
  if (m.multiclass) {
    json models = json::array();
    for (const OvrModel::Entry& e : m.ovr.entries)
      models.push_back(json{{"class_id", e.class_id},
                            {"label", m.labels.at(static_cast<std::size_t>(e.class_id))},
                            {"positives", e.positives},
                            {"negatives", e.negatives},
                            {"ir", e.ir},
                            {"cost_ir", e.cost_ir},
                            {"model", any_model_to_json(e.model)}});
    j["models"] = models;
  } else {
    j["model"] = any_model_to_json(m.binary);
  }
  return j.dump(2) + "\n";
}

PipelineModel model_from_json(const std::string& text) {
  json j = detail::parse_document(text, "model document");
  if (get_or<std::string>(j, "format", "") != "icost-model")
    fail(errc::bad_params, "not an icost model document");
  if (get_as<int>(j, "version") != 1) fail(errc::bad_params, "unsupported model version");

  PipelineModel m;
  m.label_column = get_as<std::string>(j, "label_column");
  m.labels = get_as<std::vector<std::string>>(j, "labels");
  m.feature_names = get_as<std::vector<std::string>>(j, "feature_names");
  const json& s = j.at("standardizer");
  m.standardizer.means = get_as<std::vector<double>>(s, "means");
  m.standardizer.stdevs = get_as<std::vector<double>>(s, "stdevs");
  const std::string task = get_as<std::string>(j, "task");
  if (task != "binary" && task != "ovr") fail(errc::bad_params, "task must be binary or ovr");
  m.multiclass = task == "ovr";
  m.positive_id = get_as<int>(j, "positive_id");
  m.negative_id = get_as<int>(j, "negative_id");
  m.ir = get_as<double>(j, "ir");
  m.learner = detail::learner_from_json(j.at("learner"));
  m.cost = detail::cost_from_json(j.at("cost"));
  if (m.multiclass) {
    for (const json& ej : j.at("models")) {
      OvrModel::Entry e;
      e.class_id = get_as<int>(ej, "class_id");
      e.positives = get_as<std::int64_t>(ej, "positives");
      e.negatives = get_as<std::int64_t>(ej, "negatives");
      e.ir = get_as<double>(ej, "ir");
      e.cost_ir = get_as<double>(ej, "cost_ir");
      e.model = any_model_from_json(ej.at("model"));
      m.ovr.entries.push_back(std::move(e));
    }
    if (m.ovr.entries.empty()) fail(errc::bad_params, "ovr model document has no class models");
  } else {
    m.binary = any_model_from_json(j.at("model"));
  }
  return m;
}

Prediction predict_row(const PipelineModel& m, std::span<const double> raw) {
  std::vector<double> x = transform_row(m.standardizer, raw);
  Prediction p;
  if (m.multiclass) {
    std::vector<double> scores = ovr_scores(m.ovr, x);
    std::size_t best = 0;
    for (std::size_t c = 1; c < scores.size(); ++c)
      if (scores[c] > scores[best]) best = c;
    int class_id = m.ovr.entries[best].class_id;
    p.label = m.labels.at(static_cast<std::size_t>(class_id));
    p.score = scores[best];
    return p;
  }
  p.score = predict_score(m.binary, x);
  int predicted = predict_label(m.binary, x);
  if (predicted == 1) {
    p.label = m.labels.at(static_cast<std::size_t>(m.positive_id));
  } else if (m.negative_id == ImbalanceStats::pooled_rest) {
    p.label = "rest";
  } else {
    p.label = m.labels.at(static_cast<std::size_t>(m.negative_id));
  }
  return p;
}

}  // namespace icost
