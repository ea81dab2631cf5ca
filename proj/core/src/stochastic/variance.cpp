#include "smoothcvx/stochastic/variance.hpp"

namespace smoothcvx {

GradientVariance gradient_variance_probe(const FiniteSum& problem, const Point& w,
                                         const Point& center) {
  const std::size_t n = problem.size();
  const auto d = static_cast<Eigen::Index>(problem.dim());
  Point mean_g = Point::Zero(d), mean_diff = Point::Zero(d);
  double sq_g = 0.0, sq_diff = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point gi = problem.component_gradient(i, w);
    const Point di = gi - problem.component_gradient(i, center);
    mean_g += gi;
    mean_diff += di;
    sq_g += gi.squaredNorm();
    sq_diff += di.squaredNorm();
  }
  const double inv = 1.0 / static_cast<double>(n);
  mean_g *= inv;
  mean_diff *= inv;
  GradientVariance v;
  v.sgd_var = std::max(0.0, sq_g * inv - mean_g.squaredNorm());
  v.mixed_var = std::max(0.0, sq_diff * inv - mean_diff.squaredNorm());
  return v;
}

}  // namespace smoothcvx
