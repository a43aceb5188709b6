#include "icost/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <future>
#include <thread>

#include "icost/error.hpp"
#include "icost/rng.hpp"

namespace icost {

std::string GridValue::text() const {
  if (times_ir && factor == 1.0) return "IR";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", factor);
  std::string s(buf);
  return times_ir ? s + "*IR" : s;
}

GridValue parse_grid_value(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return c == ' '; }), s.end());
  if (s.empty()) fail(errc::bad_params, "empty grid value");
  GridValue v;
  if (s == "IR") {
    v.times_ir = true;
    return v;
  }
  std::string num = s;
  if (s.size() > 3 && s.compare(s.size() - 3, 3, "*IR") == 0) {
    v.times_ir = true;
    num = s.substr(0, s.size() - 3);
  }
  const char* first = num.data();
  const char* last = num.data() + num.size();
  auto [p, ec] = std::from_chars(first, last, v.factor);
  if (ec != std::errc{} || p != last || !std::isfinite(v.factor) || v.factor <= 0.0)
    fail(errc::bad_params, "bad grid value '" + text + "' (want a positive number, IR, or n*IR)");
  return v;
}

std::size_t GridSpec::n_cells() const {
  if (axes.empty()) return 0;
  std::size_t n = 1;
  for (const GridAxis& a : axes) n *= a.values.size();
  return n;
}

namespace {

std::vector<GridValue> scaled(std::initializer_list<double> factors) {
  std::vector<GridValue> v;
  for (double f : factors) v.push_back({f, true});
  return v;
}

}  // namespace

GridSpec default_grid(CostMode mode, CostScheme scheme) {
  GridSpec g;
  switch (mode) {
    case CostMode::original:
      g.axes.push_back({"cost", scaled({0.8, 0.9, 1.0, 1.1, 1.2})});
      break;
    case CostMode::neighborhood:
      if (scheme == CostScheme::gen)
        fail(errc::bad_params, "no built-in grid for type=gen; provide one in the config");
      g.axes.push_back({"pure", {GridValue{1.0, false}, GridValue{0.2, true}}});
      g.axes.push_back({"safe", scaled({0.25, 0.35, 0.5})});
      g.axes.push_back({"border", scaled({0.75, 0.9, 1.0, 1.1, 1.25})});
      break;
    case CostMode::mst:
      g.axes.push_back({"linked", scaled({0.75, 0.9, 1.0, 1.1, 1.25})});
      g.axes.push_back({"normal", scaled({0.3, 0.5, 0.7})});
      break;
  }
  return g;
}

namespace {

struct TaskShape {
  bool multiclass = false;
  int positive_id = 1;
  int negative_id = 0;
};

TaskShape task_shape(const Dataset& d, const std::string& positive) {
  TaskShape shape;
  if (d.n_classes() >= 3 && positive == "auto") {
    shape.multiclass = true;
    return shape;
  }
  ImbalanceStats stats = imbalance_stats(d, positive);
  shape.positive_id = stats.minority_id;
  shape.negative_id = stats.majority_id;
  return shape;
}

DatasetSummary summarize(const Dataset& d, const ExperimentPlan& plan, const TaskShape& shape) {
  DatasetSummary s;
  s.path = plan.dataset_path;
  s.n = d.n();
  s.dims = d.dims();
  s.n_classes = d.n_classes();
  s.labels = d.label_names;
  s.class_counts = d.class_counts;
  s.multiclass = shape.multiclass;
  if (!shape.multiclass) {
    s.positive = d.label_names[static_cast<std::size_t>(shape.positive_id)];
    std::size_t pos = d.class_counts[static_cast<std::size_t>(shape.positive_id)];
    s.ir = static_cast<double>(d.n() - pos) / static_cast<double>(pos);
  }
  return s;
}

void check_plan(const ExperimentPlan& plan) {
  if (plan.n_folds < 2) fail(errc::bad_params, "n_folds must be >= 2");
  if (plan.n_repeats < 1) fail(errc::bad_params, "n_repeats must be >= 1");
  if (plan.threads < 0) fail(errc::bad_params, "threads must be >= 0");
}

}  // namespace

FoldModel train_fold(const Dataset& d, const std::vector<int>& train_rows,
                     const ExperimentPlan& plan, std::uint64_t fold_seed) {
  if (train_rows.empty()) fail(errc::empty_row_set, "empty training partition");
  TaskShape shape = task_shape(d, plan.positive);

  FoldModel m;
  m.multiclass = shape.multiclass;
  m.positive_id = shape.positive_id;
  m.negative_id = shape.negative_id;
  m.standardizer = fit_standardizer(d.features, train_rows);
  Matrix X = transform(m.standardizer, d.features, train_rows);

  std::vector<int> y_train(train_rows.size());
  for (std::size_t i = 0; i < train_rows.size(); ++i)
    y_train[i] = d.labels[static_cast<std::size_t>(train_rows[i])];

  if (shape.multiclass) {
    m.ovr = train_ovr(X, y_train, static_cast<int>(d.n_classes()), plan.learner, plan.cost,
                      fold_seed);
    return m;
  }

  std::vector<int> y = binarize(y_train, shape.positive_id);
  std::size_t pos = 0;
  for (int label : y) pos += static_cast<std::size_t>(label);
  if (pos == 0) fail(errc::degenerate_labels, "training partition has no positive instances");
  if (pos == y.size()) fail(errc::degenerate_labels, "training partition has no negative instances");
  m.ir = std::max(static_cast<double>(y.size() - pos) / static_cast<double>(pos), 1.0);

  ComplexityProfiles profiles = compute_profiles(plan.cost, X, y);
  WeightVector weights = assign_weights(plan.cost, profiles, y, m.ir);
  m.binary = train_model(plan.learner, X, y, weights, fold_seed);
  return m;
}

FoldMetrics evaluate_fold(const Dataset& d, const FoldModel& m,
                          const std::vector<int>& test_rows) {
  if (test_rows.empty()) fail(errc::empty_fold, "empty evaluation fold");
  Matrix X = transform(m.standardizer, d.features, test_rows);

  if (!m.multiclass) {
    std::vector<int> y_true(test_rows.size()), y_pred(test_rows.size());
    std::vector<std::pair<double, int>> scores(test_rows.size());
    for (std::size_t i = 0; i < test_rows.size(); ++i) {
      int label = d.labels[static_cast<std::size_t>(test_rows[i])];
      y_true[i] = label == m.positive_id ? 1 : 0;
      scores[i] = {predict_score(m.binary, X.row(i)), y_true[i]};
      y_pred[i] = predict_label(m.binary, X.row(i));
    }
    return binary_metrics(tally_predictions(y_true, y_pred), scores);
  }

  const std::size_t n_classes = m.ovr.entries.size();
  std::vector<ClassEval> per_class(n_classes);
  std::vector<int> y_pred(test_rows.size());
  Matrix all_scores(test_rows.size(), n_classes);
  for (std::size_t i = 0; i < test_rows.size(); ++i) {
    std::vector<double> s = ovr_scores(m.ovr, X.row(i));
    for (std::size_t c = 0; c < n_classes; ++c) all_scores(i, c) = s[c];
    std::size_t best = 0;
    for (std::size_t c = 1; c < n_classes; ++c)
      if (s[c] > s[best]) best = c;
    y_pred[i] = m.ovr.entries[best].class_id;
  }
  for (std::size_t c = 0; c < n_classes; ++c) {
    const int class_id = m.ovr.entries[c].class_id;
    std::vector<int> t(test_rows.size()), p(test_rows.size());
    per_class[c].scores.resize(test_rows.size());
    for (std::size_t i = 0; i < test_rows.size(); ++i) {
      t[i] = d.labels[static_cast<std::size_t>(test_rows[i])] == class_id ? 1 : 0;
      p[i] = y_pred[i] == class_id ? 1 : 0;
      per_class[c].scores[i] = {all_scores(i, c), t[i]};
    }
    per_class[c].tally = tally_predictions(t, p);
  }
  return macro_metrics(per_class);
}

ExperimentResult run_experiment(const ExperimentPlan& plan, const Dataset& d) {
  check_plan(plan);
  TaskShape shape = task_shape(d, plan.positive);

  ExperimentResult result;
  result.dataset = summarize(d, plan, shape);
  result.plan = plan;

  SplitPlan split = make_split_plan(d, plan.n_folds, plan.n_repeats, plan.seed);
  const std::size_t n_tasks =
      static_cast<std::size_t>(plan.n_repeats) * static_cast<std::size_t>(plan.n_folds);
  std::vector<FoldMetrics> metrics(n_tasks);

  auto run_one = [&](std::size_t task) {
    const int repeat = static_cast<int>(task) / plan.n_folds;
    const int fold = static_cast<int>(task) % plan.n_folds;
    try {
      std::vector<int> train_rows = split.train_rows(repeat, fold);
      std::vector<int> test_rows = split.test_rows(repeat, fold);
      FoldModel model = train_fold(d, train_rows, plan,
                                   derive_seed(plan.seed, "fold",
                                               static_cast<std::uint64_t>(repeat),
                                               static_cast<std::uint64_t>(fold)));
      metrics[task] = evaluate_fold(d, model, test_rows);
    } catch (const Error& e) {
      fail(e.code(), "repeat " + std::to_string(repeat) + " fold " + std::to_string(fold) + ": " +
                         e.what());
    }
  };

  unsigned n_threads = plan.threads == 0 ? std::max(std::thread::hardware_concurrency(), 1u)
                                         : static_cast<unsigned>(plan.threads);
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(n_tasks));
  if (n_threads <= 1) {
    for (std::size_t task = 0; task < n_tasks; ++task) run_one(task);
  } else {
    // Static round-robin split; results land in a preallocated slot per
    // (repeat, fold) index, so scheduling cannot affect the report.
    std::vector<std::future<void>> workers;
    workers.reserve(n_threads);
    for (unsigned w = 0; w < n_threads; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t task = w; task < n_tasks; task += n_threads) run_one(task);
      }));
    }
    for (auto& f : workers) f.get();  // rethrows the first worker error
  }

  result.folds.reserve(n_tasks);
  for (std::size_t task = 0; task < n_tasks; ++task)
    result.folds.push_back({static_cast<int>(task) / plan.n_folds,
                            static_cast<int>(task) % plan.n_folds, metrics[task]});
  MetricsReport report = aggregate_folds(metrics);
  result.mean = report.mean;
  result.stdev = report.stdev;
  return result;
}

namespace {

// Odometer over axis value indices, last axis fastest.
std::vector<std::size_t> cell_indices(const GridSpec& grid, std::size_t cell) {
  std::vector<std::size_t> idx(grid.axes.size(), 0);
  for (std::size_t a = grid.axes.size(); a-- > 0;) {
    std::size_t size = grid.axes[a].values.size();
    idx[a] = cell % size;
    cell /= size;
  }
  return idx;
}

CostSpec cell_spec(const CostSpec& base, const GridSpec& grid,
                   const std::vector<std::size_t>& idx, double ir) {
  CostSpec spec = base;
  spec.has_scalar = false;
  spec.scalar = 0.0;
  spec.list.clear();
  spec.named.clear();
  auto value = [&](std::size_t axis) {
    return std::max(grid.axes[axis].values[idx[axis]].resolve(ir), 1.0);
  };
  switch (base.mode) {
    case CostMode::original:
      spec.has_scalar = true;
      spec.scalar = value(0);
      break;
    case CostMode::neighborhood:
      // axes: pure, safe, border; CostSpec lists (cfb, cfs, cfp)
      spec.list = {value(2), value(1), value(0)};
      break;
    case CostMode::mst:
      spec.list = {value(0), value(1)};
      break;
  }
  return spec;
}

void check_grid_axes(const GridSpec& grid, CostMode mode) {
  std::vector<std::string> want;
  switch (mode) {
    case CostMode::original: want = {"cost"}; break;
    case CostMode::neighborhood: want = {"pure", "safe", "border"}; break;
    case CostMode::mst: want = {"linked", "normal"}; break;
  }
  if (grid.axes.size() != want.size())
    fail(errc::bad_params, "grid must have " + std::to_string(want.size()) + " axes for this algorithm");
  for (std::size_t a = 0; a < want.size(); ++a) {
    if (grid.axes[a].name != want[a])
      fail(errc::bad_params, "grid axis " + std::to_string(a) + " must be '" + want[a] + "'");
    if (grid.axes[a].values.empty())
      fail(errc::bad_params, "grid axis '" + want[a] + "' has no candidates");
  }
}

}  // namespace

GridSearchResult grid_search(const ExperimentPlan& plan, const Dataset& d) {
  check_plan(plan);
  if (plan.cost.mode == CostMode::neighborhood && plan.cost.scheme == CostScheme::gen)
    fail(errc::bad_params, "grid search covers the original, ins, and mst cost schemes only");
  TaskShape shape = task_shape(d, plan.positive);
  if (shape.multiclass)
    fail(errc::bad_params, "grid search needs a binary task; set --positive to pick one class");

  GridSearchResult result;
  result.grid = plan.grid.has_value() ? *plan.grid : default_grid(plan.cost.mode, plan.cost.scheme);
  check_grid_axes(result.grid, plan.cost.mode);

  DatasetSummary summary = summarize(d, plan, shape);
  result.ir = summary.ir;

  const std::size_t n_cells = result.grid.n_cells();
  result.cells.reserve(n_cells);
  std::size_t best = 0;
  std::vector<ExperimentResult> runs;
  runs.reserve(n_cells);
  for (std::size_t cell = 0; cell < n_cells; ++cell) {
    std::vector<std::size_t> idx = cell_indices(result.grid, cell);
    ExperimentPlan cell_plan = plan;
    cell_plan.grid.reset();
    cell_plan.cost = cell_spec(plan.cost, result.grid, idx, result.ir);
    ExperimentResult run = run_experiment(cell_plan, d);

    GridCell gc;
    gc.spec = cell_plan.cost;
    for (std::size_t a = 0; a < result.grid.axes.size(); ++a)
      gc.params.emplace_back(result.grid.axes[a].name,
                             std::max(result.grid.axes[a].values[idx[a]].resolve(result.ir), 1.0));
    gc.mean = run.mean;
    gc.stdev = run.stdev;
    result.cells.push_back(std::move(gc));
    runs.push_back(std::move(run));

    const GridCell& c = result.cells[cell];
    const GridCell& b = result.cells[best];
    if (cell > 0 && (c.mean.mcc > b.mean.mcc ||
                     (c.mean.mcc == b.mean.mcc && c.mean.gmean > b.mean.gmean)))
      best = cell;
  }
  result.best_index = best;
  result.best = std::move(runs[best]);
  return result;
}

Dataset make_synthetic(const std::string& generator, std::uint64_t seed, std::size_t n_majority,
                       std::size_t n_minority, double overlap) {
  if (generator != "blobs") fail(errc::bad_params, "unknown generator '" + generator + "'");
  if (n_majority < 1 || n_minority < 1) fail(errc::bad_params, "cluster sizes must be >= 1");
  if (!(overlap >= 0.0 && overlap <= 1.0)) fail(errc::bad_params, "overlap must be in [0, 1]");

  const double separation = (1.0 - overlap) * 4.0;
  Rng rng(derive_seed(seed, "synth"));
  const std::size_t n = n_majority + n_minority;
  Matrix X(n, 2);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool majority = i < n_majority;
    X(i, 0) = rng.normal() + (majority ? 0.0 : separation);
    X(i, 1) = rng.normal();
    labels[i] = majority ? "majority" : "minority";
  }
  return make_dataset(std::move(X), std::move(labels));
}

}  // namespace icost
