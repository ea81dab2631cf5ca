#include "smoothcvx/core/objective.hpp"

#include <Eigen/Eigenvalues>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

double FiniteSum::value(const Point& w) const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += component_value(i, w);
  return s / static_cast<double>(size());
}

Point FiniteSum::gradient(const Point& w) const {
  Point g = Point::Zero(static_cast<Eigen::Index>(dim()));
  for (std::size_t i = 0; i < size(); ++i) g += component_gradient(i, w);
  return g / static_cast<double>(size());
}

Quadratic::Quadratic(Matrix A, Point center) : A_(std::move(A)), c_(std::move(center)) {
  if (A_.rows() != A_.cols() || A_.rows() != c_.size()) throw InputError("quadratic: shape");
  Eigen::SelfAdjointEigenSolver<Matrix> es(A_, Eigen::EigenvaluesOnly);
  L_ = es.eigenvalues().maxCoeff();
  mu_ = std::max(0.0, es.eigenvalues().minCoeff());
  if (es.eigenvalues().minCoeff() < -1e-12 * std::max(1.0, L_))
    throw InputError("quadratic: hessian is not positive semidefinite");
}

double Quadratic::value(const Point& w) const {
  const Point r = w - c_;
  return 0.5 * r.dot(A_ * r);
}

Point Quadratic::gradient(const Point& w) const { return A_ * (w - c_); }

}  // namespace smoothcvx
