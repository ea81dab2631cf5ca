#include "smoothcvx/problems/linear_models.hpp"

#include <cmath>

#include "smoothcvx/core/errors.hpp"
#include "smoothcvx/problems/constants.hpp"

namespace smoothcvx {
namespace {

// log(1 + e^x) without overflow
double softplus(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

LinearModel::LinearModel(const LabeledDataset& data, double lambda, double curvature)
    : X_(data.matrix()),
      y_(Eigen::Map<const Eigen::VectorXd>(data.labels.data(),
                                           static_cast<Eigen::Index>(data.labels.size()))),
      lambda_(lambda),
      curvature_(curvature) {
  if (data.size() == 0) throw InputError("no examples");
  if (!(lambda >= 0.0)) throw ConfigError("regularizer lambda must be non-negative");
}

void LinearModel::init_constants() {
  const EigenEstimate e = power_iteration([this](const Point& v) { return apply_gram(v); }, dim(), 100);
  L_ = e.value + lambda_;
  double mx = 0.0;
  for (Eigen::Index i = 0; i < X_.rows(); ++i) mx = std::max(mx, X_.row(i).squaredNorm());
  L_max_ = curvature_ * mx + lambda_;
}

Point LinearModel::apply_gram(const Point& v) const {
  const Eigen::VectorXd xv = X_ * v;
  return (curvature_ / static_cast<double>(size())) * (X_.transpose() * xv);
}

double LinearModel::value(const Point& w) const {
  const Eigen::VectorXd m = X_ * w;
  double s = 0.0;
  for (Eigen::Index i = 0; i < m.size(); ++i) s += loss(y_[i], m[i]);
  return s / static_cast<double>(size()) + 0.5 * lambda_ * w.squaredNorm();
}

Point LinearModel::gradient(const Point& w) const {
  const Eigen::VectorXd m = X_ * w;
  Eigen::VectorXd c(m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) c[i] = dloss(y_[i], m[i]);
  Point g = X_.transpose() * c;
  g /= static_cast<double>(size());
  g += lambda_ * w;
  return g;
}

double LinearModel::component_value(std::size_t i, const Point& w) const {
  const auto k = static_cast<Eigen::Index>(i);
  const double m = X_.row(k).dot(w);
  return loss(y_[k], m) + 0.5 * lambda_ * w.squaredNorm();
}

Point LinearModel::component_gradient(std::size_t i, const Point& w) const {
  const auto k = static_cast<Eigen::Index>(i);
  const double m = X_.row(k).dot(w);
  Point g = lambda_ * w;
  const double c = dloss(y_[k], m);
  for (SparseMatrix::InnerIterator it(X_, k); it; ++it) g[it.col()] += c * it.value();
  return g;
}

LogisticProblem::LogisticProblem(const LabeledDataset& data, double lambda)
    : LinearModel(data, lambda, 0.25) {
  if (!data.is_classification()) throw InputError("logistic problem needs labels in {-1, +1}");
  init_constants();
}

double LogisticProblem::loss(double y, double m) const { return softplus(-y * m); }
double LogisticProblem::dloss(double y, double m) const { return -y * sigmoid(-y * m); }

LeastSquaresProblem::LeastSquaresProblem(const LabeledDataset& data, double lambda)
    : LinearModel(data, lambda, 2.0) {
  init_constants();
}

Point LeastSquaresProblem::normal_equations_solution() const {
  const Eigen::MatrixXd Xd = Eigen::MatrixXd(X());
  const double n = static_cast<double>(size());
  // grad F = (2/n) X^T (Xw - y) + lambda w = 0
  Eigen::MatrixXd A = (2.0 / n) * Xd.transpose() * Xd;
  A.diagonal().array() += lambda();
  const Eigen::VectorXd b = (2.0 / n) * Xd.transpose() * y();
  // Minimum-norm solution, so rank-deficient designs are fine.
  return A.completeOrthogonalDecomposition().solve(b);
}

}  // namespace smoothcvx
