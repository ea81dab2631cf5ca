#pragma once

#include <cstddef>
#include <functional>

#include "smoothcvx/online/learner.hpp"

namespace smoothcvx {

// (1/delta) sum_i (f(x + delta e_i) - f(x)) e_i, using d + 1 value queries.
Point forward_difference_gradient(const std::function<double(const Point&)>& f, const Point& x,
                                  double delta);

struct BanditParams {
  double radius = 1.0;          // W = ball(radius) with radius <= 1, so r = radius
  double lipschitz = 1.0;       // G: value Lipschitz constant
  double smoothness = 1.0;      // L
  std::size_t horizon = 1;      // T
  double egv_values = 0.0;      // sum_t max_x |f_{t+1}(x) - f_t(x)|; 0 means unknown (use sqrt2 G)
  double delta = 0.0;           // overrides when > 0
  double eta = 0.0;
};

// Deterministic multi-point bandit mirror prox on the shrunk ball (1 - alpha) W, alpha = delta/r.
// Each round queries f_t at x_t and x_t + delta e_i, i = 1..d.
class BanditOmp : public OnlineLearner {
 public:
  BanditOmp(std::size_t dim, BanditParams params);

  const Point& predict() override { return x_; }
  void observe(const RoundLoss& loss) override;
  const Point& search_point() override { return z_; }
  std::string name() const override { return "bandit_omp"; }

  double delta() const { return delta_; }
  double eta() const { return eta_; }
  double alpha() const { return alpha_; }
  const Point& last_estimate() const { return last_grad_; }

 private:
  double delta_, eta_, alpha_, step_, inner_radius_;
  Point z_, x_, last_grad_;
};

}  // namespace smoothcvx
