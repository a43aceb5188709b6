#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "icost/costing.hpp"
#include "icost/matrix.hpp"

namespace icost {

struct LogRegModel {
  std::vector<double> coefficients;
  double intercept = 0.0;
  double l2 = 0.0;
  int iterations_run = 0;
  double final_loss = 0.0;

  bool operator==(const LogRegModel&) const = default;
};

struct LinearSvmModel {
  std::vector<double> w;
  double b = 0.0;
  double lambda = 0.0;

  bool operator==(const LinearSvmModel&) const = default;
};

/// feature >= 0 marks an internal node (x[feature] <= threshold goes left);
/// leaves carry the summed training weight per class.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  std::array<double, 2> leaf_weight{0.0, 0.0};

  bool operator==(const TreeNode&) const = default;
};

struct TreeModel {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  int min_samples_split = 2;
  int max_depth = -1;  // -1 = unlimited

  bool operator==(const TreeModel&) const = default;
};

struct ForestModel {
  std::vector<TreeModel> trees;
  int n_trees = 0;
  int features_per_split = 0;
  std::uint64_t seed = 0;

  bool operator==(const ForestModel&) const = default;
};

// All four trainers (and the objective/gradient helpers) accept an empty
// weight vector as the unweighted specialization: identical to passing all
// ones, through the same code path.

/// Minimizes (1/W)*sum_i w_i*logloss_i + (l2/2)*||theta||^2 with W = sum w_i,
/// by full-batch gradient descent with backtracking line search from a zero
/// start. The intercept is not regularized. Labels are 0/1.
LogRegModel train_logreg(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                         double l2 = 1e-4, int max_iter = 1000, double tol = 1e-8);

/// Objective and gradient at an arbitrary point, for verification. The
/// gradient vector is d/d(coefficients...) followed by d/d(intercept).
double logreg_objective(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                        const std::vector<double>& coefficients, double intercept, double l2);
std::vector<double> logreg_gradient(const Matrix& X, const std::vector<int>& y,
                                    const WeightVector& weights,
                                    const std::vector<double>& coefficients, double intercept,
                                    double l2);

/// Minimizes (lambda/2)*||w||^2 + sum_i w_i*hinge_i by cyclic sub-gradient
/// descent with step 1/(lambda*t), a seed-derived instance order per epoch,
/// and the final iterate returned. b is not regularized. Labels are 0/1
/// (trained internally as -1/+1).
LinearSvmModel train_linear_svm(const Matrix& X, const std::vector<int>& y,
                                const WeightVector& weights, double lambda = 1.0,
                                int epochs = 200, std::uint64_t seed = 0);

double svm_objective(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                     const std::vector<double>& w, double b, double lambda);

/// Greedy CART on weighted Gini impurity. Candidate thresholds are midpoints
/// of consecutive distinct sorted values; ties break toward the lower feature
/// index, then the lower threshold. Labels are 0/1.
TreeModel train_tree(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                     int min_samples_split = 2, int max_depth = -1);

/// Bagged trees: each tree fits a size-N bootstrap carrying the sampled rows'
/// weights, choosing among ceil(sqrt(D)) features per split. bootstrap=false
/// is a test hook: identity sample and all features, so a 1-tree forest
/// equals train_tree.
ForestModel train_forest(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                         int n_trees = 100, std::uint64_t seed = 0, int min_samples_split = 2,
                         int max_depth = -1, bool bootstrap = true);

double predict_score(const LogRegModel& m, std::span<const double> x);  // P(y=1)
double predict_score(const LinearSvmModel& m, std::span<const double> x);  // signed margin
double predict_score(const TreeModel& m, std::span<const double> x);  // positive weight share
double predict_score(const ForestModel& m, std::span<const double> x);  // mean of tree shares

enum class Learner { logreg, svm, tree, forest };

const char* learner_name(Learner k);
Learner parse_learner(const std::string& name);

struct LearnerConfig {
  Learner kind = Learner::logreg;
  double l2 = 1e-4;  // logreg
  int max_iter = 1000;
  double tol = 1e-8;
  double lambda = 1.0;  // svm
  int epochs = 200;
  int min_samples_split = 2;  // tree, forest
  int max_depth = -1;
  int n_trees = 100;  // forest

  bool operator==(const LearnerConfig&) const = default;
};

using AnyModel = std::variant<LogRegModel, LinearSvmModel, TreeModel, ForestModel>;

AnyModel train_model(const LearnerConfig& config, const Matrix& X, const std::vector<int>& y,
                     const WeightVector& weights, std::uint64_t seed);

double predict_score(const AnyModel& m, std::span<const double> x);

/// 1 iff the score clears the model's natural cutoff (probability 0.5, margin
/// 0, share 0.5); exact ties go to class 0.
int predict_label(const AnyModel& m, std::span<const double> x);

}  // namespace icost
