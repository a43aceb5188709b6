#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "icost/error.hpp"
#include "icost/multiclass.hpp"
#include "icost/rng.hpp"

using namespace icost;

namespace {

// Three Gaussian blobs at triangle corners; class c has `counts[c]` rows.
struct Blobs3 {
  Matrix X;
  std::vector<int> y;

  Blobs3(const std::vector<std::size_t>& counts, std::uint64_t seed, double spread = 0.6) {
    std::size_t total = 0;
    for (std::size_t c : counts) total += c;
    X = Matrix(total, 2);
    Rng rng(seed);
    const double cx[3] = {0.0, 6.0, 3.0};
    const double cy[3] = {0.0, 0.0, 5.0};
    std::size_t row = 0;
    for (std::size_t c = 0; c < counts.size(); ++c) {
      for (std::size_t i = 0; i < counts[c]; ++i, ++row) {
        X(row, 0) = cx[c] + spread * rng.normal();
        X(row, 1) = cy[c] + spread * rng.normal();
        y.push_back(static_cast<int>(c));
      }
    }
  }
};

LearnerConfig logreg_config() {
  LearnerConfig c;
  c.kind = Learner::logreg;
  return c;
}

CostSpec ins_defaults() {
  CostSpec s;
  s.mode = CostMode::neighborhood;
  s.scheme = CostScheme::ins;
  return s;
}

}  // namespace

TEST_CASE("balanced 3-class toy: three models, each binarized IR = 2") {
  Blobs3 data({20, 20, 20}, 555);
  OvrModel m = train_ovr(data.X, data.y, 3, logreg_config(), ins_defaults(), 9);
  REQUIRE(m.entries.size() == 3);
  for (int c = 0; c < 3; ++c) {
    const auto& entry = m.entries[static_cast<std::size_t>(c)];
    CHECK(entry.class_id == c);
    CHECK(entry.positives == 20);
    CHECK(entry.negatives == 40);
    CHECK(entry.ir == 2.0);
    CHECK(entry.cost_ir == 2.0);
  }
}

TEST_CASE("skewed counts: majority-positive subproblem clamps its cost IR to 1") {
  Blobs3 data({150, 35, 30}, 556);
  OvrModel m = train_ovr(data.X, data.y, 3, logreg_config(), ins_defaults(), 10);
  REQUIRE(m.entries.size() == 3);

  CHECK(m.entries[0].ir == 65.0 / 150.0);
  CHECK(m.entries[0].cost_ir == 1.0);  // majority-positive view degrades to unweighted
  CHECK(m.entries[1].ir == 180.0 / 35.0);
  CHECK(m.entries[1].cost_ir == 180.0 / 35.0);
  CHECK(m.entries[2].ir == 185.0 / 30.0);
  CHECK(m.entries[2].cost_ir == 185.0 / 30.0);

  // Binarization is exact.
  CHECK(m.entries[0].positives + m.entries[0].negatives == 215);
  CHECK(m.entries[1].positives == 35);
  CHECK(m.entries[2].positives == 30);
}

TEST_CASE("train_ovr is deterministic in the seed") {
  Blobs3 data({15, 10, 8}, 557);
  OvrModel a = train_ovr(data.X, data.y, 3, logreg_config(), ins_defaults(), 42);
  OvrModel b = train_ovr(data.X, data.y, 3, logreg_config(), ins_defaults(), 42);
  CHECK(a == b);
}

TEST_CASE("each class model equals a standalone binary pipeline run") {
  Blobs3 data({15, 10, 8}, 558);
  const LearnerConfig learner = logreg_config();
  const CostSpec cost = ins_defaults();
  const std::uint64_t seed = 1234;
  OvrModel m = train_ovr(data.X, data.y, 3, learner, cost, seed);

  for (int c = 0; c < 3; ++c) {
    std::vector<int> binary(data.y.size());
    std::int64_t pos = 0;
    for (std::size_t i = 0; i < data.y.size(); ++i) {
      binary[i] = data.y[i] == c ? 1 : 0;
      pos += binary[i];
    }
    const double ir =
        static_cast<double>(static_cast<std::int64_t>(data.y.size()) - pos) /
        static_cast<double>(pos);
    const double cost_ir = std::max(ir, 1.0);
    const ComplexityProfiles profiles = compute_profiles(cost, data.X, binary);
    const WeightVector weights = assign_weights(cost, profiles, binary, cost_ir);
    const AnyModel standalone = train_model(learner, data.X, binary, weights,
                                            derive_seed(seed, "ovr", static_cast<std::uint64_t>(c)));
    CHECK(m.entries[static_cast<std::size_t>(c)].model == standalone);
  }
}

TEST_CASE("ovr prediction: argmax with ties to the smaller class id") {
  OvrModel m;
  for (int c = 0; c < 3; ++c) {
    OvrModel::Entry e;
    e.class_id = c;
    LogRegModel lr;
    lr.coefficients = {0.0};
    lr.intercept = 0.0;  // scores 0.5 for every input
    e.model = lr;
    m.entries.push_back(e);
  }
  const std::vector<double> x{1.0};
  CHECK(ovr_scores(m, x) == std::vector<double>{0.5, 0.5, 0.5});
  CHECK(predict_ovr(m, x) == 0);

  // A dominant score wins.
  LogRegModel strong;
  strong.coefficients = {0.0};
  strong.intercept = 3.0;
  m.entries[2].model = strong;
  CHECK(predict_ovr(m, x) == 2);

  OvrModel empty;
  CHECK_THROWS_AS(predict_ovr(empty, x), Error);
}

TEST_CASE("3-class blobs reach training accuracy >= 0.95") {
  Blobs3 data({40, 25, 15}, 560);
  OvrModel m = train_ovr(data.X, data.y, 3, logreg_config(), ins_defaults(), 7);
  int correct = 0;
  for (std::size_t i = 0; i < data.X.rows(); ++i)
    if (predict_ovr(m, data.X.row(i)) == data.y[i]) ++correct;
  CHECK(static_cast<double>(correct) / static_cast<double>(data.X.rows()) >= 0.95);
}

TEST_CASE("train_ovr validation") {
  Blobs3 data({10, 10, 10}, 561);

  try {
    train_ovr(data.X, data.y, 2, logreg_config(), ins_defaults(), 0);
    FAIL("expected TooFewClasses");
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_few_classes);
  }

  // n_classes promises 4 classes but class 3 never occurs.
  try {
    train_ovr(data.X, data.y, 4, logreg_config(), ins_defaults(), 0);
    FAIL("expected DegenerateLabels");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_labels);
    CHECK(std::string(e.what()).find("class 3") != std::string::npos);
  }

  std::vector<int> bad = data.y;
  bad[0] = 7;
  CHECK_THROWS_AS(train_ovr(data.X, bad, 3, logreg_config(), ins_defaults(), 0), Error);

  // Per-class failures carry the offending class id.
  LearnerConfig broken = logreg_config();
  broken.kind = Learner::svm;
  broken.lambda = -1.0;
  try {
    train_ovr(data.X, data.y, 3, broken, ins_defaults(), 0);
    FAIL("expected per-class error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("class 0") != std::string::npos);
  }
}
