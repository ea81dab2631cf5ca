#include "smoothcvx/online/strict_omp.hpp"

#include <string>

#include "smoothcvx/core/errors.hpp"
#include "smoothcvx/core/prox.hpp"

namespace smoothcvx {

StrictlyConvexOmp::StrictlyConvexOmp(std::size_t dim, double radius, double beta, double gradient_bound)
    : radius_(radius), beta_(beta) {
  if (dim == 0 || dim > kMaxDim)
    throw ConfigError("strictly convex OMP supports 1 <= d <= " + std::to_string(kMaxDim) + ", got " +
                      std::to_string(dim));
  if (!(radius > 0.0) || !(beta > 0.0) || !(gradient_bound >= 0.0))
    throw ConfigError("strictly convex OMP needs radius > 0, beta > 0 and G >= 0");
  const auto d = static_cast<Eigen::Index>(dim);
  H_ = (1.0 + beta * gradient_bound * gradient_bound) * Matrix::Identity(d, d);
  z_ = Point::Zero(d);
  x_ = z_;
  last_grad_ = Point::Zero(d);
}

void StrictlyConvexOmp::observe(const RoundLoss& loss) {
  ++counters_.rounds;
  ++counters_.gradients;
  const Point g = loss.gradient(x_);
  z_ = mahalanobis_ball_prox(H_, z_, g, radius_);
  H_.noalias() += beta_ * g * g.transpose();
  last_grad_ = g;
  x_ = mahalanobis_ball_prox(H_, z_, last_grad_, radius_);
}

}  // namespace smoothcvx
