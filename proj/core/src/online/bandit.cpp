#include "smoothcvx/online/bandit.hpp"

#include <algorithm>
#include <cmath>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

Point forward_difference_gradient(const std::function<double(const Point&)>& f, const Point& x,
                                  double delta) {
  if (!(delta > 0.0)) throw ConfigError("finite-difference step must be positive");
  const double base = f(x);
  Point g(x.size());
  Point probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + delta;
    g[i] = (f(probe) - base) / delta;
    probe[i] = x[i];
  }
  return g;
}

BanditOmp::BanditOmp(std::size_t dim, BanditParams p) {
  const double r = p.radius;
  if (!(r > 0.0 && r <= 1.0)) throw ConfigError("bandit OMP needs a ball of radius in (0, 1]");
  if (!(p.lipschitz > 0.0) || !(p.smoothness >= 0.0) || p.horizon == 0)
    throw ConfigError("bandit OMP needs G > 0, L >= 0 and T >= 1");
  const double d = static_cast<double>(dim);
  const double G = p.lipschitz;
  const double scale = std::max(std::sqrt(2.0) * G, std::sqrt(std::max(p.egv_values, 0.0)));
  delta_ = p.delta > 0.0 ? p.delta
                         : std::sqrt(4.0 * d * scale /
                                     ((std::sqrt(d) * p.smoothness + G * (1.0 + 1.0 / r)) *
                                      static_cast<double>(p.horizon)));
  if (delta_ >= r) throw ConfigError("bandit OMP needs delta < r so that query points stay in W");
  const double ratio = p.egv_values > 0.0 ? G / std::sqrt(p.egv_values) : 1.0 / std::sqrt(2.0);
  eta_ = p.eta > 0.0 ? p.eta : delta_ / (4.0 * d) * std::min(1.0 / std::sqrt(2.0), ratio);
  alpha_ = delta_ / r;
  step_ = eta_ / G;
  inner_radius_ = (1.0 - alpha_) * r;
  const auto n = static_cast<Eigen::Index>(dim);
  z_ = Point::Zero(n);
  x_ = z_;
  last_grad_ = Point::Zero(n);
}

namespace {

Point project_ball(const Point& x, double r) {
  const double n = x.norm();
  return n > r ? Point(x * (r / n)) : x;
}

}  // namespace

void BanditOmp::observe(const RoundLoss& loss) {
  ++counters_.rounds;
  counters_.values += static_cast<std::uint64_t>(x_.size()) + 1;
  const Point g = forward_difference_gradient([&](const Point& p) { return loss.value(p); }, x_, delta_);
  z_ = project_ball(z_ - step_ * g, inner_radius_);
  last_grad_ = g;
  x_ = project_ball(z_ - step_ * last_grad_, inner_radius_);
}

}  // namespace smoothcvx
