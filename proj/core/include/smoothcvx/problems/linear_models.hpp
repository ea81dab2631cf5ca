#pragma once

#include "smoothcvx/core/objective.hpp"
#include "smoothcvx/problems/dataset.hpp"

namespace smoothcvx {

// Finite sum over examples (x_i, y_i) with f_i(w) = loss(y_i, <w, x_i>) + (lambda/2)||w||^2,
// so F(w) = (1/n) sum loss + (lambda/2)||w||^2.
class LinearModel : public FiniteSum {
 public:
  LinearModel(const LabeledDataset& data, double lambda, double curvature);

  std::size_t dim() const override { return static_cast<std::size_t>(X_.cols()); }
  std::size_t size() const override { return static_cast<std::size_t>(X_.rows()); }
  double value(const Point& w) const override;
  Point gradient(const Point& w) const override;
  double component_value(std::size_t i, const Point& w) const override;
  Point component_gradient(std::size_t i, const Point& w) const override;
  double smoothness() const override { return L_; }
  double strong_convexity() const override { return lambda_; }
  double sample_smoothness() const override { return L_max_; }

  double lambda() const { return lambda_; }
  const SparseMatrix& X() const { return X_; }
  const Eigen::VectorXd& y() const { return y_; }
  // Bound on the second derivative of the scalar loss (1/4 logistic, 2 squared).
  double curvature() const { return curvature_; }
  // Applies (curvature / n) X^T X, the Hessian bound without the regularizer.
  Point apply_gram(const Point& v) const;

 protected:
  virtual double loss(double y, double m) const = 0;
  virtual double dloss(double y, double m) const = 0;  // d/dm

 private:
  SparseMatrix X_;
  Eigen::VectorXd y_;
  double lambda_;
  double curvature_;
  double L_ = 0.0;
  double L_max_ = 0.0;

 protected:
  void init_constants();
};

class LogisticProblem final : public LinearModel {
 public:
  LogisticProblem(const LabeledDataset& data, double lambda);

 protected:
  double loss(double y, double m) const override;
  double dloss(double y, double m) const override;
};

class LeastSquaresProblem final : public LinearModel {
 public:
  LeastSquaresProblem(const LabeledDataset& data, double lambda);
  // Minimum-norm minimizer over R^d via the normal equations (dense).
  Point normal_equations_solution() const;

 protected:
  double loss(double y, double m) const override { return (y - m) * (y - m); }
  double dloss(double y, double m) const override { return -2.0 * (y - m); }
};

}  // namespace smoothcvx
