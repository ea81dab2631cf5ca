#include "smoothcvx/adversary/variation.hpp"

#include <string>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

namespace {

double sq(const Point& v, VariationNorm norm) {
  if (v.size() == 0) return 0.0;
  if (norm == VariationNorm::linf) {
    const double m = v.cwiseAbs().maxCoeff();
    return m * m;
  }
  return v.squaredNorm();
}

}  // namespace

double egv_at_points(const LossSequence& seq, const std::vector<Point>& points, VariationNorm norm) {
  const std::size_t T = seq.rounds();
  if (points.size() < T)
    throw InputError("extended EGV needs " + std::to_string(T) + " points, got " + std::to_string(points.size()));
  double total = sq(seq.at(1).gradient(points[0]), norm);
  RoundLoss prev = seq.at(1);
  for (std::size_t t = 1; t < T; ++t) {
    RoundLoss next = seq.at(t + 1);
    total += sq(next.gradient(points[t]) - prev.gradient(points[t]), norm);
    prev = std::move(next);
  }
  return total;
}

double egv_sup(const LossSequence& seq, VariationNorm norm) {
  const std::size_t T = seq.rounds();
  const auto d = static_cast<Eigen::Index>(seq.dim());
  RoundLoss first = seq.at(1);
  const LossKind kind = first.kind();
  if (kind == LossKind::linear || kind == LossKind::hinge) {
    // Linear gradients are constant; for hinge losses the variation is that of y_t x_t.
    Point prev = Point::Zero(d);
    double total = 0.0;
    for (std::size_t t = 1; t <= T; ++t) {
      const RoundLoss f = t == 1 ? first : seq.at(t);
      if (f.kind() != kind) throw UnsupportedError("egv_sup: mixed loss kinds");
      total += sq(f.vector() - prev, norm);
      prev = f.vector();
    }
    return total;
  }
  if (kind == LossKind::quadratic) {
    // grad f_{t+1} - grad f_t = s (c_t - c_{t+1}) for a common curvature s: constant in x.
    const double s = first.curvature();
    double total = 0.0;
    Point prev_center;
    for (std::size_t t = 1; t <= T; ++t) {
      const RoundLoss f = t == 1 ? first : seq.at(t);
      if (f.kind() != LossKind::quadratic || f.curvature() != s)
        throw UnsupportedError("egv_sup: quadratics need a common curvature");
      if (t == 1) {
        // f_0 = 0, so the first term is max_x ||s (x - c_1)||^2, unbounded without a domain;
        // report it at x = 0 as the extended definition does.
        total += sq(s * f.vector(), norm);
      } else {
        total += sq(s * (prev_center - f.vector()), norm);
      }
      prev_center = f.vector();
    }
    return total;
  }
  throw UnsupportedError("egv_sup has no closed form for this loss family; use egv_at_points");
}

double total_variation(const LossSequence& seq) {
  const std::size_t T = seq.rounds();
  const auto d = static_cast<Eigen::Index>(seq.dim());
  Point mean = Point::Zero(d);
  for (std::size_t t = 1; t <= T; ++t) {
    const RoundLoss f = seq.at(t);
    if (f.kind() != LossKind::linear) throw UnsupportedError("total variation is defined for linear losses");
    mean += f.vector();
  }
  mean /= static_cast<double>(T);
  double total = 0.0;
  for (std::size_t t = 1; t <= T; ++t) total += (seq.at(t).vector() - mean).squaredNorm();
  return total;
}

}  // namespace smoothcvx
