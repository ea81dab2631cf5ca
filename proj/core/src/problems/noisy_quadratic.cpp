#include "smoothcvx/problems/noisy_quadratic.hpp"

#include <cmath>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

NoisyQuadratic::NoisyQuadratic(Matrix A, Point center, double noise)
    : base_(std::move(A), std::move(center)), noise_(noise) {
  if (!(noise >= 0.0)) throw ConfigError("noise level must be non-negative");
}

Point NoisyQuadratic::noise_vector(std::uint64_t token) const {
  const auto d = static_cast<Eigen::Index>(dim());
  const double s = noise_ / std::sqrt(static_cast<double>(d));
  Point xi(d);
  Rng r(token, 0x6e6f);
  std::uint64_t bits = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (i % 64 == 0) bits = r.next_u64();
    xi[i] = (bits >> (i % 64)) & 1u ? s : -s;
  }
  return xi;
}

double NoisyQuadratic::sample_value(std::uint64_t token, const Point& w) const {
  return base_.value(w) + noise_vector(token).dot(w);
}

Point NoisyQuadratic::sample_gradient(std::uint64_t token, const Point& w) const {
  return base_.gradient(w) + noise_vector(token);
}

}  // namespace smoothcvx
