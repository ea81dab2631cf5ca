#pragma once

#include <cstddef>

#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/online/learner.hpp"

namespace smoothcvx {

// Improved follow-the-regularized-leader.
//   x_t = argmin_W <x, grad f_{t-1}(z_{t-1})> + (L / 2 eta) ||x - z_{t-1}||^2
//   z_t = argmin_W <x, sum_{s<=t} grad f_s(z_{s-1})> + (L / 2 eta) ||x||^2
// Both are Euclidean projections, so every domain with an exact projection works.
// Two gradient evaluations per round: grad f_t(z_{t-1}) for the running sum and
// grad f_t(z_t) for the next decision.
class Iftrl : public OnlineLearner {
 public:
  Iftrl(std::size_t dim, Domain domain, double smoothness, double eta);

  const Point& predict() override { return x_; }
  void observe(const RoundLoss& loss) override;
  const Point& search_point() override { return z_; }
  std::string name() const override { return "iftrl"; }

 private:
  Domain domain_;
  double step_;  // eta / L
  Point z_, x_, sum_grad_;
};

}  // namespace smoothcvx
