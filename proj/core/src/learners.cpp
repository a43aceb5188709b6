#include <variant>

#include "icost/error.hpp"
#include "icost/learners.hpp"

namespace icost {

const char* learner_name(Learner k) {
  switch (k) {
    case Learner::logreg: return "logreg";
    case Learner::svm: return "svm";
    case Learner::tree: return "tree";
    case Learner::forest: return "forest";
  }
  return "?";
}

Learner parse_learner(const std::string& name) {
  if (name == "logreg") return Learner::logreg;
  if (name == "svm") return Learner::svm;
  if (name == "tree") return Learner::tree;
  if (name == "forest") return Learner::forest;
  fail(errc::bad_params, "unknown learner '" + name + "' (logreg|svm|tree|forest)");
}

AnyModel train_model(const LearnerConfig& config, const Matrix& X, const std::vector<int>& y,
                     const WeightVector& weights, std::uint64_t seed) {
  switch (config.kind) {
    case Learner::logreg:
      return train_logreg(X, y, weights, config.l2, config.max_iter, config.tol);
    case Learner::svm:
      return train_linear_svm(X, y, weights, config.lambda, config.epochs, seed);
    case Learner::tree:
      return train_tree(X, y, weights, config.min_samples_split, config.max_depth);
    case Learner::forest:
      return train_forest(X, y, weights, config.n_trees, seed, config.min_samples_split,
                          config.max_depth);
  }
  fail(errc::bad_params, "unknown learner kind");
}

double predict_score(const AnyModel& m, std::span<const double> x) {
  return std::visit([&](const auto& model) { return predict_score(model, x); }, m);
}

int predict_label(const AnyModel& m, std::span<const double> x) {
  double cutoff = std::holds_alternative<LinearSvmModel>(m) ? 0.0 : 0.5;
  return predict_score(m, x) > cutoff ? 1 : 0;
}

}  // namespace icost
