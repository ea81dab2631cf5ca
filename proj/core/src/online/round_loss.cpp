#include "smoothcvx/online/round_loss.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

RoundLoss RoundLoss::linear(Point f) {
  RoundLoss l;
  l.kind_ = LossKind::linear;
  l.vec_ = std::move(f);
  return l;
}

RoundLoss RoundLoss::quadratic(Point center, double curvature) {
  if (!(curvature >= 0.0)) throw ConfigError("quadratic curvature must be non-negative");
  RoundLoss l;
  l.kind_ = LossKind::quadratic;
  l.vec_ = std::move(center);
  l.scale_ = curvature;
  return l;
}

RoundLoss RoundLoss::hinge(Point yx) {
  RoundLoss l;
  l.kind_ = LossKind::hinge;
  auto parts = std::make_shared<MaxParts>();
  parts->A = -yx.transpose();
  parts->c = Point::Constant(1, -1.0);
  parts->dual = DualSet::unit_box;
  l.parts_ = std::move(parts);
  l.vec_ = std::move(yx);
  return l;
}

RoundLoss RoundLoss::with_max_structure(MaxParts parts) {
  if (parts.A.rows() == 0 || parts.A.cols() == 0) throw InputError("max structure needs a non-empty A");
  if (parts.c.size() == 0) parts.c = Point::Zero(parts.A.rows());
  if (parts.c.size() != parts.A.rows())
    throw InputError("max structure: c has " + std::to_string(parts.c.size()) + " entries, A has " +
                     std::to_string(parts.A.rows()) + " rows");
  if (static_cast<bool>(parts.fhat_value) != static_cast<bool>(parts.fhat_gradient))
    throw InputError("max structure: fhat needs both value and gradient");
  RoundLoss l;
  l.kind_ = LossKind::max_structure;
  l.dim_ = static_cast<std::size_t>(parts.A.cols());
  l.parts_ = std::make_shared<const MaxParts>(std::move(parts));
  return l;
}

RoundLoss RoundLoss::custom(std::size_t dim, ValueFn value, GradientFn gradient, double smoothness) {
  if (!value || !gradient) throw InputError("custom loss needs value and gradient");
  RoundLoss l;
  l.kind_ = LossKind::custom;
  l.dim_ = dim;
  l.scale_ = smoothness;
  l.value_ = std::move(value);
  l.gradient_ = std::move(gradient);
  return l;
}

void RoundLoss::check_dim(const Point& x) const {
  if (static_cast<std::size_t>(x.size()) != dim())
    throw InputError("loss of dimension " + std::to_string(dim()) + " evaluated at a point of dimension " +
                     std::to_string(x.size()));
}

namespace {

// max_{u in Q} <a, u>
double support(const Point& a, DualSet q) {
  if (q == DualSet::simplex) return a.maxCoeff();
  return a.cwiseMax(0.0).sum();
}

// A maximizer of <a, u> over Q.
Point support_point(const Point& a, DualSet q) {
  Point u = Point::Zero(a.size());
  if (q == DualSet::simplex) {
    Eigen::Index i = 0;
    a.maxCoeff(&i);
    u[i] = 1.0;
  } else {
    for (Eigen::Index i = 0; i < a.size(); ++i) u[i] = a[i] > 0.0 ? 1.0 : 0.0;
  }
  return u;
}

}  // namespace

double RoundLoss::value(const Point& x) const {
  check_dim(x);
  switch (kind_) {
    case LossKind::linear: return vec_.dot(x);
    case LossKind::quadratic: return 0.5 * scale_ * (x - vec_).squaredNorm();
    case LossKind::hinge: return std::max(0.0, 1.0 - vec_.dot(x));
    case LossKind::max_structure: {
      const double smooth = parts_->fhat_value ? parts_->fhat_value(x) : 0.0;
      return smooth + support(parts_->A * x - parts_->c, parts_->dual);
    }
    case LossKind::custom: return value_(x);
  }
  return 0.0;
}

Point RoundLoss::gradient(const Point& x) const {
  check_dim(x);
  switch (kind_) {
    case LossKind::linear: return vec_;
    case LossKind::quadratic: return scale_ * (x - vec_);
    case LossKind::hinge:
      if (1.0 - vec_.dot(x) > 0.0) return -vec_;
      return Point::Zero(x.size());
    case LossKind::max_structure: {
      Point g = parts_->A.transpose() * support_point(parts_->A * x - parts_->c, parts_->dual);
      if (parts_->fhat_gradient) g += parts_->fhat_gradient(x);
      return g;
    }
    case LossKind::custom: return gradient_(x);
  }
  return Point();
}

double RoundLoss::smoothness() const {
  switch (kind_) {
    case LossKind::linear: return 0.0;
    case LossKind::quadratic: return scale_;
    case LossKind::custom: return scale_;
    case LossKind::hinge:
    case LossKind::max_structure: return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

}  // namespace smoothcvx
