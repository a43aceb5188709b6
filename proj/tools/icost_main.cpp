// icost: cost-sensitive learning driven by per-instance complexity profiles.
//
// Subcommands: analyze, train, predict, evaluate, gridsearch, synth.
// Exit codes: 0 success, 2 invalid input or configuration, 1 runtime failure.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icost/complexity.hpp"
#include "icost/costing.hpp"
#include "icost/dataset.hpp"
#include "icost/error.hpp"
#include "icost/harness.hpp"
#include "icost/learners.hpp"
#include "icost/model_io.hpp"
#include "icost/report_io.hpp"
#include "icost/rng.hpp"

namespace {

using icost::errc;
using icost::fail;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::file_not_found, path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(errc::file_not_found, "cannot open for writing: " + path);
  out << content;
  if (!out) fail(errc::file_not_found, "write failed: " + path);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    write_file(path, content);
}

double parse_number(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last) fail(errc::bad_params, "not a number: '" + text + "'");
  return v;
}

void apply_cost_factor(const std::string& text, icost::CostSpec& cost) {
  cost.has_scalar = false;
  cost.scalar = 0.0;
  cost.list.clear();
  cost.named.clear();
  if (!text.empty() && text.front() == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      fail(errc::bad_params, "cost-factor JSON map is malformed");
    for (const auto& item : j.items()) {
      if (!item.value().is_number())
        fail(errc::bad_params, "cost-factor map values must be numbers");
      cost.named[item.key()] = item.value().get<double>();
    }
    return;
  }
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) cost.list.push_back(parse_number(cell));
    return;
  }
  cost.has_scalar = true;
  cost.scalar = parse_number(text);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// Shared experiment flags. Values only land in the plan when the flag was
// actually passed, so a --config file provides the base and flags override.
struct PlanFlags {
  std::string config;
  std::string dataset;
  std::string label;
  std::string positive;
  std::string learner;
  std::string algorithm;
  std::string type;
  std::string cost_factor;
  int n_neighbors = 5;
  double linked_majority_weight = 1.0;
  int folds = 5;
  int repeats = 10;
  std::uint64_t seed = 0;
  int threads = 1;
  double l2 = 1e-4;
  int max_iter = 1000;
  double tol = 1e-8;
  double lambda = 1.0;
  int epochs = 200;
  int min_samples_split = 2;
  int max_depth = -1;
  int n_trees = 100;

  CLI::Option* dataset_opt = nullptr;

  void attach(CLI::App* cmd, bool with_protocol) {
    cmd->add_option("--config", config, "plan JSON file; other flags override it");
    dataset_opt = cmd->add_option("dataset", dataset, "input CSV (header row required)");
    cmd->add_option("--label", label, "label column name, or 'last'");
    cmd->add_option("--positive", positive,
                    "positive class label; 'auto' = minority of a binary dataset");
    cmd->add_option("--algorithm", algorithm, "cost algorithm: original|neighborhood|mst");
    cmd->add_option("--type", type, "neighborhood scheme: ins|gen");
    cmd->add_option("--cost-factor", cost_factor,
                    "scalar, comma list, or JSON map; omit for IR-based defaults");
    cmd->add_option("--n-neighbors", n_neighbors, "neighbourhood size k");
    cmd->add_option("--linked-majority-weight", linked_majority_weight,
                    "mst option: weight in (0,1] for majority instances on cross-class edges");
    if (with_protocol) {
      cmd->add_option("--learner", learner, "logreg|svm|tree|forest");
      cmd->add_option("--folds", folds, "stratified folds per repeat");
      cmd->add_option("--repeats", repeats, "shuffled repeats of the fold split");
      cmd->add_option("--seed", seed, "master seed");
      cmd->add_option("--threads", threads, "worker threads for folds; 0 = all cores");
      cmd->add_option("--l2", l2, "logreg: ridge strength");
      cmd->add_option("--max-iter", max_iter, "logreg: max gradient-descent iterations");
      cmd->add_option("--tol", tol, "logreg: loss-drop stopping tolerance");
      cmd->add_option("--lambda", lambda, "svm: regularization weight");
      cmd->add_option("--epochs", epochs, "svm: training epochs");
      cmd->add_option("--min-samples-split", min_samples_split, "tree/forest: split threshold");
      cmd->add_option("--max-depth", max_depth, "tree/forest: depth limit, -1 = none");
      cmd->add_option("--trees", n_trees, "forest: ensemble size");
    }
  }

  icost::ExperimentPlan build(const CLI::App* cmd) const {
    icost::ExperimentPlan plan;
    if (cmd->count("--config")) plan = icost::plan_from_json(read_file(config));
    auto passed = [&](const std::string& name) { return cmd->count(name) > 0; };
    if (dataset_opt->count()) plan.dataset_path = dataset;
    if (passed("--label")) plan.label_column = label;
    if (passed("--positive")) plan.positive = positive;
    if (passed("--algorithm")) plan.cost.mode = icost::parse_cost_mode(algorithm);
    if (passed("--type")) plan.cost.scheme = icost::parse_cost_scheme(type);
    if (passed("--cost-factor")) apply_cost_factor(cost_factor, plan.cost);
    if (passed("--n-neighbors")) plan.cost.n_neighbors = n_neighbors;
    if (passed("--linked-majority-weight"))
      plan.cost.linked_majority_weight = linked_majority_weight;
    if (cmd->get_option_no_throw("--learner") != nullptr) {
      if (passed("--learner")) plan.learner.kind = icost::parse_learner(learner);
      if (passed("--folds")) plan.n_folds = folds;
      if (passed("--repeats")) plan.n_repeats = repeats;
      if (passed("--seed")) plan.seed = seed;
      if (passed("--threads")) plan.threads = threads;
      if (passed("--l2")) plan.learner.l2 = l2;
      if (passed("--max-iter")) plan.learner.max_iter = max_iter;
      if (passed("--tol")) plan.learner.tol = tol;
      if (passed("--lambda")) plan.learner.lambda = lambda;
      if (passed("--epochs")) plan.learner.epochs = epochs;
      if (passed("--min-samples-split")) plan.learner.min_samples_split = min_samples_split;
      if (passed("--max-depth")) plan.learner.max_depth = max_depth;
      if (passed("--trees")) plan.learner.n_trees = n_trees;
    }
    if (plan.dataset_path.empty())
      fail(errc::bad_params, "no dataset given (positional argument or \"dataset\" in --config)");
    return plan;
  }
};

json analyze_binary(const icost::Matrix& X, const std::vector<int>& y,
                    const icost::CostSpec& cost, double ir) {
  json out;
  out["ir"] = ir;
  icost::ComplexityProfiles profiles = icost::compute_profiles(cost, X, y);
  icost::WeightVector weights = icost::assign_weights(cost, profiles, y, ir);
  switch (cost.mode) {
    case icost::CostMode::original: {
      out["resolved_costs"] = {{"cost", icost::resolve_original(cost, ir)}};
      break;
    }
    case icost::CostMode::neighborhood: {
      std::size_t pure = 0, safe = 0, border = 0;
      std::vector<std::size_t> grades(static_cast<std::size_t>(cost.n_neighbors) + 1, 0);
      for (const auto& p : profiles.neighborhood) {
        if (p.category == icost::Category::pure) ++pure;
        else if (p.category == icost::Category::safe) ++safe;
        else ++border;
        ++grades[static_cast<std::size_t>(p.grade)];
      }
      out["categories"] = {{"pure", pure}, {"safe", safe}, {"border", border}};
      out["grades"] = grades;
      if (cost.scheme == icost::CostScheme::ins) {
        icost::InsCosts c = icost::resolve_ins(cost, ir);
        out["resolved_costs"] = {{"cfb", c.cfb}, {"cfs", c.cfs}, {"cfp", c.cfp}};
      } else {
        out["resolved_costs"] = {{"grades", icost::resolve_gen(cost, ir, cost.n_neighbors)}};
      }
      break;
    }
    case icost::CostMode::mst: {
      std::size_t linked = 0;
      for (const auto& p : profiles.mst) linked += p.linked ? 1 : 0;
      out["categories"] = {{"linked", linked}, {"normal", profiles.mst.size() - linked}};
      out["linked_majority"] = profiles.linked_majority.size();
      icost::MstCosts c = icost::resolve_mst(cost, ir);
      out["resolved_costs"] = {{"cfl", c.cfl}, {"cfn", c.cfn}};
      icost::MstEdgeList mst = icost::build_mst(X);
      out["mst_total_weight"] = mst.total_weight;
      break;
    }
  }
  double min_w = weights.empty() ? 1.0 : weights[0];
  double max_w = min_w;
  for (double w : weights) {
    min_w = std::min(min_w, w);
    max_w = std::max(max_w, w);
  }
  out["weights"] = {{"min", min_w}, {"max", max_w}};
  return out;
}

int cmd_analyze(const PlanFlags& flags, const CLI::App* cmd, const std::string& out_path) {
  icost::ExperimentPlan plan = flags.build(cmd);
  icost::Dataset d = icost::load_csv(plan.dataset_path, plan.label_column);
  std::vector<int> all(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) all[i] = static_cast<int>(i);
  icost::Standardizer s = icost::fit_standardizer(d, all);
  icost::Matrix X = icost::transform(s, d.features, all);

  json report;
  report["dataset"] = {{"path", plan.dataset_path},
                       {"n", d.n()},
                       {"dims", d.dims()},
                       {"n_classes", d.n_classes()},
                       {"labels", d.label_names},
                       {"class_counts", d.class_counts}};
  report["algorithm"] = icost::cost_mode_name(plan.cost.mode);
  if (plan.cost.mode == icost::CostMode::neighborhood) {
    report["type"] = icost::cost_scheme_name(plan.cost.scheme);
    report["n_neighbors"] = plan.cost.n_neighbors;
  }

  if (d.n_classes() >= 3 && plan.positive == "auto") {
    json classes = json::array();
    for (std::size_t c = 0; c < d.n_classes(); ++c) {
      std::vector<int> y = icost::binarize(d.labels, static_cast<int>(c));
      std::size_t pos = d.class_counts[c];
      double ir = std::max(static_cast<double>(d.n() - pos) / static_cast<double>(pos), 1.0);
      json entry = analyze_binary(X, y, plan.cost, ir);
      entry["label"] = d.label_names[c];
      entry["positives"] = pos;
      entry["negatives"] = d.n() - pos;
      classes.push_back(std::move(entry));
    }
    report["classes"] = std::move(classes);
  } else {
    icost::ImbalanceStats stats = icost::imbalance_stats(d, plan.positive);
    std::vector<int> y = icost::binarize(d.labels, stats.minority_id);
    report["positive"] = d.label_names[static_cast<std::size_t>(stats.minority_id)];
    json entry = analyze_binary(X, y, plan.cost, stats.ir);
    for (auto& [key, value] : entry.items()) report[key] = value;
  }
  emit(out_path, report.dump(2) + "\n");
  return 0;
}

int cmd_train(const PlanFlags& flags, const CLI::App* cmd, const std::string& out_path) {
  icost::ExperimentPlan plan = flags.build(cmd);
  icost::Dataset d = icost::load_csv(plan.dataset_path, plan.label_column);
  std::vector<int> all(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) all[i] = static_cast<int>(i);
  icost::FoldModel fitted =
      icost::train_fold(d, all, plan, icost::derive_seed(plan.seed, "train"));
  icost::PipelineModel model = icost::make_pipeline_model(d, fitted, plan);
  write_file(out_path, icost::model_to_json(model));
  std::cout << "model (" << icost::learner_name(plan.learner.kind) << ", "
            << icost::cost_mode_name(plan.cost.mode) << ") written to " << out_path << "\n";
  return 0;
}

std::vector<std::vector<double>> read_feature_rows(const std::string& path,
                                                   const icost::PipelineModel& model) {
  std::ifstream in(path);
  if (!in) fail(errc::file_not_found, path);
  std::string line;
  if (!std::getline(in, line)) fail(errc::malformed_csv, "empty file: " + path);

  auto split = [](const std::string& text) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(text);
    while (std::getline(ss, cell, ',')) {
      while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
      while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
      cells.push_back(cell);
    }
    if (!text.empty() && text.back() == ',') cells.emplace_back();
    return cells;
  };

  const auto header = split(line);
  const std::size_t dims = model.feature_names.size();
  std::vector<std::size_t> take;
  bool by_name = true;
  for (const auto& name : model.feature_names) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      by_name = false;
      break;
    }
    take.push_back(static_cast<std::size_t>(it - header.begin()));
  }
  if (!by_name) {
    take.clear();
    for (std::size_t j = 0; j < header.size(); ++j)
      if (header[j] != model.label_column) take.push_back(j);
    if (take.size() != dims)
      fail(errc::dimension_mismatch,
           "input has " + std::to_string(take.size()) + " feature columns, model expects " +
               std::to_string(dims));
  }

  std::vector<std::vector<double>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    const auto cells = split(line);
    if (cells.size() != header.size())
      fail(errc::malformed_csv, "row " + std::to_string(line_no) + " has " +
                                    std::to_string(cells.size()) + " cells, expected " +
                                    std::to_string(header.size()));
    std::vector<double> row;
    row.reserve(dims);
    for (std::size_t j : take) row.push_back(parse_number(cells[j]));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(errc::malformed_csv, "no data rows in " + path);
  return rows;
}

int cmd_predict(const std::string& model_path, const std::string& data_path,
                const std::string& out_path) {
  icost::PipelineModel model = icost::model_from_json(read_file(model_path));
  std::vector<std::vector<double>> rows = read_feature_rows(data_path, model);
  std::string out = "prediction,score\n";
  char buf[64];
  for (const auto& row : rows) {
    icost::Prediction p = icost::predict_row(model, row);
    std::snprintf(buf, sizeof(buf), "%.17g", p.score);
    out += p.label + "," + buf + "\n";
  }
  emit(out_path, out);
  return 0;
}

int cmd_evaluate(const PlanFlags& flags, const CLI::App* cmd, const std::string& out_path,
                 const std::string& summary_path) {
  icost::ExperimentPlan plan = flags.build(cmd);
  icost::Dataset d = icost::load_csv(plan.dataset_path, plan.label_column);
  icost::ExperimentResult result = icost::run_experiment(plan, d);
  write_file(out_path, icost::experiment_report_json(result));
  if (!summary_path.empty()) write_file(summary_path, icost::experiment_summary_csv(result));
  std::cout << result.folds.size() << " folds: mcc " << fmt(result.mean.mcc) << " +/- "
            << fmt(result.stdev.mcc) << ", gmean " << fmt(result.mean.gmean) << ", roc_auc "
            << fmt(result.mean.roc_auc) << "\n";
  return 0;
}

int cmd_gridsearch(const PlanFlags& flags, const CLI::App* cmd, const std::string& out_path,
                   const std::string& summary_path) {
  icost::ExperimentPlan plan = flags.build(cmd);
  icost::Dataset d = icost::load_csv(plan.dataset_path, plan.label_column);
  icost::GridSearchResult result = icost::grid_search(plan, d);
  write_file(out_path, icost::grid_report_json(result));
  if (!summary_path.empty()) write_file(summary_path, icost::grid_summary_csv(result));
  std::cout << result.cells.size() << " cells; best";
  for (const auto& [name, value] : result.cells[result.best_index].params)
    std::cout << " " << name << "=" << fmt(value);
  std::cout << " with mcc " << fmt(result.cells[result.best_index].mean.mcc) << "\n";
  return 0;
}

int cmd_synth(const std::string& generator, std::uint64_t seed, std::size_t n_majority,
              std::size_t n_minority, double overlap, const std::string& out_path) {
  icost::Dataset d = icost::make_synthetic(generator, seed, n_majority, n_minority, overlap);
  if (out_path.empty() || out_path == "-")
    std::cout << icost::to_csv(d);
  else
    icost::save_csv(d, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cost-sensitive learning from per-instance complexity profiles"};
  app.require_subcommand(1);

  PlanFlags analyze_flags, train_flags, eval_flags, grid_flags;
  std::string analyze_out, train_out = "model.json";
  std::string eval_out = "report.json", eval_summary = "summary.csv";
  std::string grid_out = "report.json", grid_summary = "summary.csv";
  std::string predict_model, predict_data, predict_out;
  std::string synth_generator = "blobs", synth_out;
  std::uint64_t synth_seed = 0;
  std::size_t synth_majority = 100, synth_minority = 50;
  double synth_overlap = 0.5;

  CLI::App* analyze = app.add_subcommand("analyze", "complexity profile report for a dataset");
  analyze_flags.attach(analyze, false);
  analyze->add_option("--out", analyze_out, "output JSON path (default stdout)");

  CLI::App* train = app.add_subcommand("train", "fit a model on the full dataset and save it");
  train_flags.attach(train, true);
  train->add_option("--out", train_out, "model document path");

  CLI::App* predict = app.add_subcommand("predict", "apply a saved model to a CSV");
  predict->add_option("--model", predict_model, "model document from train")->required();
  predict->add_option("dataset", predict_data, "input CSV")->required();
  predict->add_option("--out", predict_out, "output CSV path (default stdout)");

  CLI::App* evaluate = app.add_subcommand("evaluate", "repeated stratified CV experiment");
  eval_flags.attach(evaluate, true);
  evaluate->add_option("--out", eval_out, "report JSON path");
  evaluate->add_option("--summary", eval_summary, "summary CSV path ('' = skip)");

  CLI::App* gridsearch = app.add_subcommand("gridsearch", "tune cost factors over a grid");
  grid_flags.attach(gridsearch, true);
  gridsearch->add_option("--out", grid_out, "report JSON path");
  gridsearch->add_option("--summary", grid_summary, "summary CSV path ('' = skip)");

  CLI::App* synth = app.add_subcommand("synth", "generate a synthetic two-cluster dataset");
  synth->add_option("--generator", synth_generator, "generator name (blobs)");
  synth->add_option("--seed", synth_seed, "generator seed");
  synth->add_option("--majority", synth_majority, "majority cluster size");
  synth->add_option("--minority", synth_minority, "minority cluster size");
  synth->add_option("--overlap", synth_overlap, "cluster overlap in [0, 1]");
  synth->add_option("--out", synth_out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
    if (*analyze) return cmd_analyze(analyze_flags, analyze, analyze_out);
    if (*train) return cmd_train(train_flags, train, train_out);
    if (*predict) return cmd_predict(predict_model, predict_data, predict_out);
    if (*evaluate) return cmd_evaluate(eval_flags, evaluate, eval_out, eval_summary);
    if (*gridsearch) return cmd_gridsearch(grid_flags, gridsearch, grid_out, grid_summary);
    if (*synth)
      return cmd_synth(synth_generator, synth_seed, synth_majority, synth_minority, synth_overlap,
                       synth_out);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  } catch (const icost::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_validation() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
