#pragma once

#include "smoothcvx/core/objective.hpp"

namespace smoothcvx {

// loss (w x - b)^2 with x = 1 and b in {delta, 1}, Pr[b = 1] = delta^2.
// Token 1 means b = 1, token 0 means b = delta.
class OneDimTargetRisk final : public Objective {
 public:
  explicit OneDimTargetRisk(double delta);

  std::size_t dim() const override { return 1; }
  double value(const Point& w) const override { return expected_loss(w[0]); }
  Point gradient(const Point& w) const override;
  double smoothness() const override { return 2.0; }
  double strong_convexity() const override { return 2.0; }

  std::uint64_t draw(Rng& rng) const override;
  double sample_value(std::uint64_t token, const Point& w) const override;
  Point sample_gradient(std::uint64_t token, const Point& w) const override;

  double delta() const { return delta_; }
  double expected_loss(double w) const;
  double minimizer() const;  // delta^2 + (1 - delta^2) delta
  double eps_opt() const;    // expected loss at the minimizer, i.e. Var(b)

 private:
  double b(std::uint64_t token) const { return token ? 1.0 : delta_; }
  double delta_;
  double p_;  // delta^2
};

}  // namespace smoothcvx
