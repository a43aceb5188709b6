#include <cmath>
#include <cstddef>

#include "icost/error.hpp"
#include "icost/learners.hpp"

namespace icost {

namespace {

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

// -y*log(h) - (1-y)*log(1-h) without forming h, stable for large |z|.
double log_loss(double z, int y) {
  return std::max(z, 0.0) - z * y + std::log1p(std::exp(-std::abs(z)));
}

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

double logreg_objective(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                        const std::vector<double>& coefficients, double intercept, double l2) {
  if (weights.empty())
    return logreg_objective(X, y, WeightVector(X.rows(), 1.0), coefficients, intercept, l2);
  if (coefficients.size() != X.cols()) fail(errc::dimension_mismatch, "coefficient length != D");
  double total_weight = 0.0;
  for (double w : weights) total_weight += w;
  double loss = 0.0;
  for (std::size_t i = 0; i < X.rows(); ++i) {
    double z = dot(X.row(i), coefficients) + intercept;
    loss += weights[i] * log_loss(z, y[i]);
  }
  double reg = 0.0;
  for (double c : coefficients) reg += c * c;
  return loss / total_weight + 0.5 * l2 * reg;
}

std::vector<double> logreg_gradient(const Matrix& X, const std::vector<int>& y,
                                    const WeightVector& weights,
                                    const std::vector<double>& coefficients, double intercept,
                                    double l2) {
  if (weights.empty())
    return logreg_gradient(X, y, WeightVector(X.rows(), 1.0), coefficients, intercept, l2);
  if (coefficients.size() != X.cols()) fail(errc::dimension_mismatch, "coefficient length != D");
  const std::size_t d = X.cols();
  double total_weight = 0.0;
  for (double w : weights) total_weight += w;
  std::vector<double> grad(d + 1, 0.0);
  for (std::size_t i = 0; i < X.rows(); ++i) {
    auto x = X.row(i);
    double z = dot(x, coefficients) + intercept;
    double r = weights[i] * (sigmoid(z) - y[i]);
    for (std::size_t j = 0; j < d; ++j) grad[j] += r * x[j];
    grad[d] += r;
  }
  for (std::size_t j = 0; j <= d; ++j) grad[j] /= total_weight;
  for (std::size_t j = 0; j < d; ++j) grad[j] += l2 * coefficients[j];
  return grad;
}

LogRegModel train_logreg(const Matrix& X, const std::vector<int>& y, const WeightVector& weights,
                         double l2, int max_iter, double tol) {
  if (weights.empty()) return train_logreg(X, y, WeightVector(X.rows(), 1.0), l2, max_iter, tol);
  check_training_input(X, y, weights);
  if (l2 < 0.0) fail(errc::bad_params, "l2 must be >= 0");
  if (max_iter < 1) fail(errc::bad_params, "max_iter must be >= 1");

  const std::size_t d = X.cols();
  std::vector<double> theta(d, 0.0);
  double intercept = 0.0;
  double loss = logreg_objective(X, y, weights, theta, intercept, l2);
  double step = 1.0;
  int iterations = 0;

  std::vector<double> trial(d, 0.0);
  for (int it = 0; it < max_iter; ++it) {
    std::vector<double> grad = logreg_gradient(X, y, weights, theta, intercept, l2);
    double grad_sq = 0.0;
    for (double g : grad) {
      if (!std::isfinite(g)) fail(errc::non_finite, "gradient is not finite");
      grad_sq += g * g;
    }
    if (grad_sq == 0.0) break;

    // Backtracking Armijo search, warm-started from twice the last step.
    step = std::min(step * 2.0, 1e6);
    double trial_intercept = 0.0;
    double trial_loss = 0.0;
    bool accepted = false;
    while (step >= 1e-15) {
      for (std::size_t j = 0; j < d; ++j) trial[j] = theta[j] - step * grad[j];
      trial_intercept = intercept - step * grad[d];
      trial_loss = logreg_objective(X, y, weights, trial, trial_intercept, l2);
      if (!std::isfinite(trial_loss)) fail(errc::non_finite, "loss is not finite");
      if (trial_loss <= loss - 1e-4 * step * grad_sq) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    theta = trial;
    intercept = trial_intercept;
    ++iterations;
    double drop = loss - trial_loss;
    loss = trial_loss;
    if (drop < tol) break;
  }

  LogRegModel m;
  m.coefficients = std::move(theta);
  m.intercept = intercept;
  m.l2 = l2;
  m.iterations_run = iterations;
  m.final_loss = loss;
  return m;
}

double predict_score(const LogRegModel& m, std::span<const double> x) {
  if (x.size() != m.coefficients.size()) fail(errc::dimension_mismatch, "feature length != D");
  return sigmoid(dot(x, m.coefficients) + m.intercept);
}

}  // namespace icost
