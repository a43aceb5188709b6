#include <cmath>
#include <cstddef>

#include "icost/error.hpp"
#include "icost/learners.hpp"
#include "icost/rng.hpp"

namespace icost {

namespace {

void check_training_input(const Matrix& X, const std::vector<int>& y, const WeightVector& weights) {
  if (y.size() != X.rows() || weights.size() != X.rows())
    fail(errc::length_mismatch, "labels/weights do not match feature rows");
  if (X.rows() < 2) fail(errc::degenerate_input, "need at least 2 instances");
  if (X.cols() < 1) fail(errc::degenerate_input, "need at least 1 feature");
  bool has0 = false, has1 = false;
  for (int label : y) {
    if (label == 0) has0 = true;
    else if (label == 1) has1 = true;
    else fail(errc::not_binary, "labels must be 0/1");
  }
  if (!has0 || !has1) fail(errc::degenerate_labels, "training data must contain both classes");
  for (double w : weights)
    if (!(w > 0.0) || !std::isfinite(w)) fail(errc::non_positive_cost, "weights must be positive");
}

}  // namespace

double svm_objective(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                     const std::vector<double>& w, double b, double lambda) {
  if (weights.empty()) return svm_objective(X, y, WeightVector(X.rows(), 1.0), w, b, lambda);
  if (w.size() != X.cols()) fail(errc::dimension_mismatch, "weight vector length != D");
  double reg = 0.0;
  for (double v : w) reg += v * v;
  double hinge = 0.0;
  for (std::size_t i = 0; i < X.rows(); ++i) {
    double s = y[i] == 1 ? 1.0 : -1.0;
    double margin = s * (dot(X.row(i), w) + b);
    if (margin < 1.0) hinge += weights[i] * (1.0 - margin);
  }
  return 0.5 * lambda * reg + hinge;
}

LinearSvmModel train_linear_svm(const Matrix& X, const std::vector<int>& y,
                                const WeightVector& weights, double lambda, int epochs,
                                std::uint64_t seed) {
  if (weights.empty())
    return train_linear_svm(X, y, WeightVector(X.rows(), 1.0), lambda, epochs, seed);
  check_training_input(X, y, weights);
  if (!(lambda > 0.0)) fail(errc::bad_params, "lambda must be > 0");
  if (epochs < 1) fail(errc::bad_params, "epochs must be >= 1");

  const std::size_t n = X.rows();
  const std::size_t d = X.cols();
  std::vector<double> w(d, 0.0);
  double b = 0.0;

  // Cyclic sub-gradient descent on the sum objective. Each visit treats
  // n * w_i * hinge_i as the stochastic estimate of the full hinge term,
  // so the data sub-gradient carries a factor n.
  std::uint64_t t = 1;
  for (int epoch = 0; epoch < epochs; ++epoch) {
    Rng rng(derive_seed(seed, "epoch", static_cast<std::uint64_t>(epoch)));
    std::vector<int> order = rng.permutation(static_cast<int>(n));
    for (int row : order) {
      const auto idx = static_cast<std::size_t>(row);
      auto x = X.row(idx);
      double s = y[idx] == 1 ? 1.0 : -1.0;
      double margin = s * (dot(x, w) + b);
      double eta = 1.0 / (lambda * static_cast<double>(t));
      double shrink = 1.0 - eta * lambda;
      for (double& v : w) v *= shrink;
      if (margin < 1.0) {
        double coef = eta * static_cast<double>(n) * weights[idx] * s;
        for (std::size_t j = 0; j < d; ++j) w[j] += coef * x[j];
        b += coef;
      }
      ++t;
    }
    for (double v : w)
      if (!std::isfinite(v)) fail(errc::non_finite, "svm weights are not finite");
    if (!std::isfinite(b)) fail(errc::non_finite, "svm intercept is not finite");
  }

  LinearSvmModel m;
  m.w = std::move(w);
  m.b = b;
  m.lambda = lambda;
  return m;
}

double predict_score(const LinearSvmModel& m, std::span<const double> x) {
  if (x.size() != m.w.size()) fail(errc::dimension_mismatch, "feature length != D");
  return dot(x, m.w) + m.b;
}

}  // namespace icost
