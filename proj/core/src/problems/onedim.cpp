#include "smoothcvx/problems/onedim.hpp"

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

OneDimTargetRisk::OneDimTargetRisk(double delta) : delta_(delta), p_(delta * delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
}

double OneDimTargetRisk::expected_loss(double w) const {
  return p_ * (w - 1.0) * (w - 1.0) + (1.0 - p_) * (w - delta_) * (w - delta_);
}

Point OneDimTargetRisk::gradient(const Point& w) const {
  Point g(1);
  g[0] = 2.0 * (w[0] - minimizer());
  return g;
}

double OneDimTargetRisk::minimizer() const { return p_ + (1.0 - p_) * delta_; }

double OneDimTargetRisk::eps_opt() const { return expected_loss(minimizer()); }

std::uint64_t OneDimTargetRisk::draw(Rng& rng) const { return rng.uniform() < p_ ? 1 : 0; }

double OneDimTargetRisk::sample_value(std::uint64_t token, const Point& w) const {
  const double r = w[0] - b(token);
  return r * r;
}

Point OneDimTargetRisk::sample_gradient(std::uint64_t token, const Point& w) const {
  Point g(1);
  g[0] = 2.0 * (w[0] - b(token));
  return g;
}

}  // namespace smoothcvx
