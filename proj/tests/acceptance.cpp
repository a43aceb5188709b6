// Acceptance gate. Each criterion prints one [PASS]/[FAIL] line; the process
// exits nonzero if any criterion fails. Oracles live in oracles.cpp and share
// no code with the library.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "icost/complexity.hpp"
#include "icost/costing.hpp"
#include "icost/dataset.hpp"
#include "icost/harness.hpp"
#include "icost/learners.hpp"
#include "icost/metrics.hpp"
#include "icost/multiclass.hpp"
#include "icost/report_io.hpp"
#include "icost/rng.hpp"
#include "oracles.hpp"

using namespace icost;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  std::string reason;

  void fail(const std::string& why) {
    if (ok) reason = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

Matrix random_matrix(Rng& rng, std::size_t n, std::size_t d) {
  Matrix X(n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) X(i, j) = rng.uniform();
  return X;
}

// Random 0/1 labels with both classes guaranteed (and at least `floor` each).
std::vector<int> random_binary_labels(Rng& rng, std::size_t n, std::size_t floor = 1) {
  std::vector<int> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = i < floor ? 0 : (i < 2 * floor ? 1 : static_cast<int>(rng.below(2)));
  return y;
}

std::vector<int> all_rows(std::size_t n) {
  std::vector<int> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = static_cast<int>(i);
  return rows;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ---------------------------------------------------------------------------
// 1. knn profiles and MST agree with exhaustive oracles.

Outcome criterion_complexity() {
  Outcome out;
  const auto start = Clock::now();
  Rng rng(101);

  for (int trial = 0; trial < 200 && out.ok; ++trial) {
    const std::size_t n = 8 + rng.below(43);   // 8..50
    const std::size_t d = 1 + rng.below(5);    // 1..5
    Matrix X = random_matrix(rng, n, d);
    std::vector<int> y = random_binary_labels(rng, n);

    std::vector<NeighborhoodProfile> profiles = knn_profiles(X, y, 5);
    std::vector<int> expected = oracle::knn_opposite_counts(X, y, 5);
    if (profiles.size() != expected.size()) {
      out.fail(fmt("trial %.0f: profile count %.0f differs from oracle",
                   static_cast<double>(trial), static_cast<double>(profiles.size())));
      break;
    }
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      if (profiles[i].opposite_count != expected[i] || profiles[i].grade != expected[i] ||
          profiles[i].category != categorize(expected[i])) {
        out.fail("knn trial " + std::to_string(trial) + ": instance " +
                 std::to_string(profiles[i].instance_index) + " got " +
                 std::to_string(profiles[i].opposite_count) + ", oracle " +
                 std::to_string(expected[i]));
        break;
      }
    }
  }

  for (int trial = 0; trial < 100 && out.ok; ++trial) {
    const std::size_t n = 2 + rng.below(19);  // 2..20
    const std::size_t d = 1 + rng.below(5);
    Matrix X = random_matrix(rng, n, d);
    MstEdgeList ours = build_mst(X);
    MstEdgeList ref = oracle::kruskal_mst(X);
    if (ours.edges.size() != n - 1 || !(ours.total_weight == ref.total_weight) ||
        !(ours.edges == ref.edges)) {
      out.fail("mst trial " + std::to_string(trial) + ": total " +
               std::to_string(ours.total_weight) + " vs oracle " +
               std::to_string(ref.total_weight));
    }
  }

  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) out.fail(fmt("took %.1f s, budget is 30 s", elapsed));
  out.note = fmt("200 knn + 100 mst datasets exact, %.1f s", elapsed);
  return out;
}

// ---------------------------------------------------------------------------
// 2. Weight assignment invariants over random valid cost specs.

Outcome criterion_weighting() {
  Outcome out;
  Rng rng(202);

  struct Pool {
    Matrix X;
    std::vector<int> y;
    double ir = 1.0;
  };
  std::vector<Pool> pool;
  for (int p = 0; p < 5; ++p) {
    Pool entry;
    const std::size_t n = 24 + rng.below(30);
    entry.X = random_matrix(rng, n, 2 + rng.below(3));
    entry.y = random_binary_labels(rng, n, 7);
    std::size_t pos = 0;
    for (int label : entry.y) pos += static_cast<std::size_t>(label);
    entry.ir = std::max(static_cast<double>(n - pos) / static_cast<double>(pos), 1.0);
    pool.push_back(std::move(entry));
  }

  auto positive = [&] { return 0.05 + 10.0 * rng.uniform(); };

  for (int trial = 0; trial < 1000 && out.ok; ++trial) {
    CostSpec spec;
    const std::uint64_t kind = rng.below(4);
    if (kind == 0) spec.mode = CostMode::original;
    if (kind == 1 || kind == 2) spec.mode = CostMode::neighborhood;
    if (kind == 3) spec.mode = CostMode::mst;
    spec.scheme = kind == 2 ? CostScheme::gen : CostScheme::ins;

    const std::uint64_t form = rng.below(3);
    if (form == 1) {
      spec.has_scalar = true;
      spec.scalar = 0.25 + 8.0 * rng.uniform();
    } else if (form == 2 && spec.mode != CostMode::original) {
      std::size_t arity = spec.mode == CostMode::mst ? 2 : (spec.scheme == CostScheme::gen ? 6 : 3);
      std::vector<double> values;
      for (std::size_t v = 0; v < arity; ++v) values.push_back(positive());
      if (spec.scheme == CostScheme::ins || spec.mode == CostMode::mst)
        std::sort(values.rbegin(), values.rend());  // explicit values must be ordered
      if (spec.mode != CostMode::mst && spec.scheme == CostScheme::gen) {
        spec.list = values;  // gen takes k+1 grades, map form is not accepted
      } else if (rng.below(2) == 0) {
        spec.list = values;
      } else if (spec.mode == CostMode::mst) {
        spec.named = {{"cfl", values[0]}, {"cfn", values[1]}};
      } else {
        spec.named = {{"cfb", values[0]}, {"cfs", values[1]}, {"cfp", values[2]}};
      }
    }

    const Pool& data = pool[rng.below(pool.size())];
    ComplexityProfiles profiles = compute_profiles(spec, data.X, data.y);
    WeightVector weights = assign_weights(spec, profiles, data.y, data.ir);
    if (weights.size() != data.y.size()) {
      out.fail("trial " + std::to_string(trial) + ": weight count mismatch");
      break;
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (data.y[i] == 0 && weights[i] != 1.0)
        out.fail("trial " + std::to_string(trial) + ": majority weight " +
                 std::to_string(weights[i]));
      if (data.y[i] == 1 && weights[i] < 1.0)
        out.fail("trial " + std::to_string(trial) + ": minority weight " +
                 std::to_string(weights[i]) + " below 1");
    }
    if (spec.mode == CostMode::neighborhood && spec.scheme == CostScheme::ins) {
      InsCosts c = resolve_ins(spec, data.ir);
      if (!(c.cfb >= c.cfs && c.cfs >= c.cfp))
        out.fail("trial " + std::to_string(trial) + ": resolved ins costs out of order");
    }
  }

  CostSpec ten;
  ten.mode = CostMode::neighborhood;
  ten.scheme = CostScheme::ins;
  ten.has_scalar = true;
  ten.scalar = 10.0;
  InsCosts c = resolve_ins(ten, 3.0);
  if (!(c.cfb == 10.0 && c.cfs == 5.0 && c.cfp == 2.5))
    out.fail("scalar 10 resolved to (" + std::to_string(c.cfb) + ", " + std::to_string(c.cfs) +
             ", " + std::to_string(c.cfp) + "), want (10, 5, 2.5)");

  out.note = "1000 random specs, exact";
  return out;
}

// ---------------------------------------------------------------------------
// 3. Learner math: gradient, replication, unweighted specialization, Gini.

Outcome criterion_learners() {
  Outcome out;
  Rng rng(303);

  // (a) analytic gradient vs central differences.
  for (int trial = 0; trial < 20 && out.ok; ++trial) {
    const std::size_t n = 6 + rng.below(25);
    const std::size_t d = 1 + rng.below(4);
    Matrix X = random_matrix(rng, n, d);
    std::vector<int> y = random_binary_labels(rng, n);
    WeightVector w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(0.5 + 2.5 * rng.uniform());
    std::vector<double> theta;
    for (std::size_t j = 0; j < d; ++j) theta.push_back(2.0 * rng.uniform() - 1.0);
    const double b = 2.0 * rng.uniform() - 1.0;
    const double l2 = 0.2 * rng.uniform();

    std::vector<double> g = logreg_gradient(X, y, w, theta, b, l2);
    std::vector<double> fd(d + 1, 0.0);
    const double h = 1e-6;
    for (std::size_t j = 0; j <= d; ++j) {
      std::vector<double> plus = theta;
      std::vector<double> minus = theta;
      double b_plus = b, b_minus = b;
      if (j < d) {
        plus[j] += h;
        minus[j] -= h;
      } else {
        b_plus += h;
        b_minus -= h;
      }
      fd[j] = (logreg_objective(X, y, w, plus, b_plus, l2) -
               logreg_objective(X, y, w, minus, b_minus, l2)) /
              (2.0 * h);
    }
    double diff2 = 0.0, norm2 = 0.0;
    for (std::size_t j = 0; j <= d; ++j) {
      diff2 += (g[j] - fd[j]) * (g[j] - fd[j]);
      norm2 += g[j] * g[j];
    }
    const double rel = std::sqrt(diff2) / std::max(1.0, std::sqrt(norm2));
    if (!(rel < 1e-5))
      out.fail(fmt("gradient trial relative error %.3g exceeds 1e-5", rel));
  }

  // (b) integer weights equal row replication for both objectives.
  for (int trial = 0; trial < 20 && out.ok; ++trial) {
    const std::size_t n = 4 + rng.below(9);  // kept small so 1e-12 is meaningful
    const std::size_t d = 1 + rng.below(3);
    Matrix X = random_matrix(rng, n, d);
    std::vector<int> y = random_binary_labels(rng, n);
    std::vector<int> reps;
    WeightVector w;
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      reps.push_back(1 + static_cast<int>(rng.below(2)));
      w.push_back(reps.back());
      total += static_cast<std::size_t>(reps.back());
    }
    Matrix Xr(total, d);
    std::vector<int> yr;
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (int copy = 0; copy < reps[i]; ++copy, ++r) {
        for (std::size_t j = 0; j < d; ++j) Xr(r, j) = X(i, j);
        yr.push_back(y[i]);
      }
    std::vector<double> theta;
    for (std::size_t j = 0; j < d; ++j) theta.push_back(rng.uniform() - 0.5);
    const double b = rng.uniform() - 0.5;
    const double l2 = 0.1 * rng.uniform();
    const double lambda = 0.05 + rng.uniform();

    const double lr_gap =
        std::fabs(logreg_objective(X, y, w, theta, b, l2) -
                  logreg_objective(Xr, yr, {}, theta, b, l2));
    const double svm_gap = std::fabs(svm_objective(X, y, w, theta, b, lambda) -
                                     svm_objective(Xr, yr, {}, theta, b, lambda));
    if (!(lr_gap < 1e-12)) out.fail(fmt("logreg replication gap %.3g", lr_gap));
    if (!(svm_gap < 1e-12)) out.fail(fmt("svm replication gap %.3g", svm_gap));
  }

  // (c) all-ones weights reproduce the weights-omitted models bitwise.
  {
    Rng gen(7);
    Matrix X = random_matrix(gen, 24, 3);
    std::vector<int> y = random_binary_labels(gen, 24, 6);
    WeightVector ones(24, 1.0);
    if (!(train_logreg(X, y, ones) == train_logreg(X, y, {}))) out.fail("logreg all-ones differs");
    if (!(train_linear_svm(X, y, ones, 0.05, 50, 3) == train_linear_svm(X, y, {}, 0.05, 50, 3)))
      out.fail("svm all-ones differs");
    if (!(train_tree(X, y, ones) == train_tree(X, y, {}))) out.fail("tree all-ones differs");
    if (!(train_forest(X, y, ones, 10, 5) == train_forest(X, y, {}, 10, 5)))
      out.fail("forest all-ones differs");
  }

  // (d) hand-enumerated weighted-Gini split fixtures.
  {
    Matrix X(4, 1);
    X(0, 0) = 0.0; X(1, 0) = 1.0; X(2, 0) = 2.0; X(3, 0) = 3.0;

    TreeModel balanced = train_tree(X, {0, 0, 1, 1}, {});
    if (!(balanced.nodes.size() == 3 && balanced.nodes[0].feature == 0 &&
          balanced.nodes[0].threshold == 1.5))
      out.fail("gini fixture 1: expected a single split at 1.5");

    // A weight-100 positive at x=0 drags the best split to 0.5.
    TreeModel heavy = train_tree(X, {1, 0, 1, 1}, {100.0, 1.0, 1.0, 1.0});
    if (!(heavy.nodes[0].feature == 0 && heavy.nodes[0].threshold == 0.5))
      out.fail("gini fixture 2: expected the root split at 0.5");

    Matrix X2(4, 2);
    X2(0, 0) = 0.0; X2(0, 1) = 5.0;
    X2(1, 0) = 1.0; X2(1, 1) = 6.0;
    X2(2, 0) = 0.0; X2(2, 1) = 7.0;
    X2(3, 0) = 1.0; X2(3, 1) = 8.0;
    TreeModel second = train_tree(X2, {0, 0, 1, 1}, {});
    bool f3 = second.nodes.size() == 3 && second.nodes[0].feature == 1 &&
              second.nodes[0].threshold == 6.5;
    std::vector<double> lo{0.0, 5.0}, hi{1.0, 8.0};
    f3 = f3 && predict_score(second, lo) == 0.0 && predict_score(second, hi) == 1.0;
    if (!f3) out.fail("gini fixture 3: expected a pure split on feature 1 at 6.5");
  }

  out.note = "gradient, replication, all-ones, gini fixtures";
  return out;
}

// ---------------------------------------------------------------------------
// 4. Metrics vs direct-counting oracles.

Outcome criterion_metrics() {
  Outcome out;
  Rng rng(404);

  for (int trial = 0; trial < 500 && out.ok; ++trial) {
    const std::size_t n = 2 + rng.below(59);
    std::vector<int> y_true(n), y_pred(n);
    std::vector<std::pair<double, int>> scores(n);
    const bool coarse = rng.below(2) == 0;  // coarse grids force score ties
    for (std::size_t i = 0; i < n; ++i) {
      y_true[i] = static_cast<int>(rng.below(2));
      y_pred[i] = static_cast<int>(rng.below(2));
      const double s = coarse ? 0.25 * static_cast<double>(rng.below(5)) : rng.uniform();
      scores[i] = {s, y_true[i]};
    }
    FoldMetrics got = binary_metrics(tally_predictions(y_true, y_pred), scores);
    oracle::Metrics8 want = oracle::metrics(y_true, y_pred, scores);
    const double expected[8] = {want.mcc,         want.roc_auc,     want.gmean,
                                want.f1,          want.sensitivity, want.specificity,
                                want.precision,   want.accuracy};
    auto values = got.values();
    for (std::size_t m = 0; m < 8; ++m) {
      if (!(std::fabs(values[m] - expected[m]) < 1e-12)) {
        out.fail(std::string("trial ") + std::to_string(trial) + ": " +
                 FoldMetrics::names()[m] + " " + std::to_string(values[m]) + " vs oracle " +
                 std::to_string(expected[m]));
        break;
      }
    }
  }

  {
    std::vector<int> y_true{1, 1, 0, 0};
    std::vector<int> y_pred{1, 0, 1, 0};
    std::vector<std::pair<double, int>> tied;
    for (int label : y_true) tied.push_back({0.7, label});
    FoldMetrics m = binary_metrics(tally_predictions(y_true, y_pred), tied);
    if (m.roc_auc != 0.5) out.fail("all-tied roc_auc is " + std::to_string(m.roc_auc));
  }

  {
    // 100 positives at sensitivity 0.8 and 10,000 negatives at specificity
    // 0.8: 20 false negatives, 2,000 false positives, g-mean exactly 0.8.
    ConfusionTally tally{80, 20, 8000, 2000};
    FoldMetrics m = binary_metrics(tally, {});
    if (!(m.sensitivity == 0.8 && m.specificity == 0.8 && m.gmean == 0.8 &&
          m.accuracy == 8080.0 / 10100.0 && m.precision == 80.0 / 2080.0))
      out.fail("imbalanced worked example did not reproduce exactly");
  }

  out.note = "500 random vectors < 1e-12, tie and worked examples exact";
  return out;
}

// ---------------------------------------------------------------------------
// 5. Default protocol shape through the CLI; default ins grid size.

Outcome criterion_protocol() {
  Outcome out;
  namespace fs = std::filesystem;
  const fs::path work = fs::temp_directory_path() / "icost_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);

  Dataset d = make_synthetic("blobs", 99, 200, 50, 0.5);
  save_csv(d, work / "data.csv");

  auto evaluate = [&](const std::string& report) {
    const std::string cmd = std::string(ICOST_CLI_PATH) + " evaluate " +
                            (work / "data.csv").string() + " --seed 3 --out " +
                            (work / report).string() + " --summary '' >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };

  if (evaluate("r1.json") != 0 || evaluate("r2.json") != 0) {
    out.fail("evaluate exited nonzero");
    return out;
  }
  const std::string r1 = slurp(work / "r1.json");
  nlohmann::json doc = nlohmann::json::parse(r1, nullptr, false);
  if (doc.is_discarded() || !doc.contains("folds")) {
    out.fail("report is not valid JSON");
    return out;
  }
  const std::size_t folds = doc.at("folds").size();
  if (folds != 50) out.fail("default protocol produced " + std::to_string(folds) + " folds");
  if (r1 != slurp(work / "r2.json")) out.fail("same seed gave different report bytes");

  const std::size_t cells = default_grid(CostMode::neighborhood, CostScheme::ins).n_cells();
  if (cells != 30) out.fail("default ins grid has " + std::to_string(cells) + " cells");

  out.note = "50 folds, byte-identical reports, 30-cell ins grid";
  return out;
}

// ---------------------------------------------------------------------------
// 6. Behavioral check: complexity-driven costs vs a flat IR cost.

Outcome criterion_behavior() {
  Outcome out;
  const auto start = Clock::now();

  double total_gain = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Dataset d = make_synthetic("blobs", seed, 900, 90, 0.6);

    ExperimentPlan weighted;
    weighted.dataset_path = "synthetic";
    weighted.learner.kind = Learner::logreg;
    weighted.cost.mode = CostMode::neighborhood;
    weighted.cost.scheme = CostScheme::ins;
    weighted.seed = seed;
    weighted.threads = 0;

    ExperimentPlan flat = weighted;
    flat.cost = CostSpec{};
    flat.cost.mode = CostMode::original;  // default cost factor resolves to IR

    const double gain =
        run_experiment(weighted, d).mean.mcc - run_experiment(flat, d).mean.mcc;
    total_gain += gain;
  }
  const double mean_gain = total_gain / 10.0;
  const double elapsed = seconds_since(start);
  if (!(mean_gain >= 0.0)) out.fail(fmt("mean mcc gain %.4f is negative", mean_gain));
  if (elapsed >= 300.0) out.fail(fmt("took %.1f s, budget is 300 s", elapsed));
  out.note = fmt("mean mcc gain %+.4f over 10 datasets, %.1f s", mean_gain, elapsed);
  return out;
}

// ---------------------------------------------------------------------------
// 7. One-vs-rest: three models, high macro metrics, per-class independence.

Outcome criterion_multiclass() {
  Outcome out;

  Rng gen(7);
  const std::vector<std::size_t> counts{60, 30, 15};
  const double cx[3] = {0.0, 6.0, 3.0};
  const double cy[3] = {0.0, 0.0, 5.0};
  const std::vector<std::string> names{"a", "b", "c"};
  std::size_t n = 105;
  Matrix X(n, 2);
  std::vector<std::string> labels;
  std::size_t row = 0;
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < counts[c]; ++i, ++row) {
      X(row, 0) = cx[c] + 0.6 * gen.normal();
      X(row, 1) = cy[c] + 0.6 * gen.normal();
      labels.push_back(names[c]);
    }
  Dataset d = make_dataset(std::move(X), std::move(labels));

  ExperimentPlan plan;
  plan.dataset_path = "blobs3";
  plan.learner.kind = Learner::logreg;
  plan.cost.mode = CostMode::neighborhood;
  plan.cost.scheme = CostScheme::ins;
  plan.seed = 7;
  plan.threads = 0;

  FoldModel fitted = train_fold(d, all_rows(d.n()), plan, 42);
  if (!fitted.multiclass || fitted.ovr.entries.size() != 3)
    out.fail("expected 3 one-vs-rest models, got " + std::to_string(fitted.ovr.entries.size()));

  Matrix Z = transform(fitted.standardizer, d.features, all_rows(d.n()));
  for (int c = 0; c < 3 && out.ok; ++c) {
    std::vector<int> binary = binarize(d.labels, c);
    std::size_t pos = d.class_counts[static_cast<std::size_t>(c)];
    const double cost_ir =
        std::max(static_cast<double>(d.n() - pos) / static_cast<double>(pos), 1.0);
    ComplexityProfiles profiles = compute_profiles(plan.cost, Z, binary);
    WeightVector weights = assign_weights(plan.cost, profiles, binary, cost_ir);
    AnyModel standalone = train_model(plan.learner, Z, binary, weights,
                                      derive_seed(42, "ovr", static_cast<std::uint64_t>(c)));
    if (!(fitted.ovr.entries[static_cast<std::size_t>(c)].model == standalone))
      out.fail("class " + std::to_string(c) + " model differs from its standalone fit");
  }

  ExperimentResult r = run_experiment(plan, d);
  auto means = r.mean.values();
  for (std::size_t m = 0; m < means.size(); ++m)
    if (!(means[m] >= 0.9))
      out.fail(std::string("macro ") + FoldMetrics::names()[m] + " is " +
               std::to_string(means[m]));

  out.note = fmt("3 of 3 models independent, macro mcc %.3f", r.mean.mcc);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* label;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {1, "complexity profiles match exhaustive oracles", criterion_complexity},
      {2, "weight assignment invariants hold for random cost specs", criterion_weighting},
      {3, "learner math checks out", criterion_learners},
      {4, "metrics match direct-counting oracles", criterion_metrics},
      {5, "default protocol is 50 deterministic folds", criterion_protocol},
      {6, "complexity costs do not lose to a flat IR cost", criterion_behavior},
      {7, "one-vs-rest is independent per class and accurate", criterion_multiclass},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome result = c.check();
    if (result.ok) {
      std::printf("[PASS] criterion %d: %s (%s)\n", c.number, c.label, result.note.c_str());
    } else {
      ++failures;
      std::printf("[FAIL] criterion %d: %s - %s\n", c.number, c.label, result.reason.c_str());
    }
    std::fflush(stdout);
  }
  if (failures > 0) std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
