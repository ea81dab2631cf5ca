#pragma once

#include <cstddef>

#include "smoothcvx/core/types.hpp"
#include "smoothcvx/online/learner.hpp"

namespace smoothcvx {

// Mirror prox in the H_t-norm for beta-strictly convex losses with gradients bounded by G:
//   H_t = (1 + beta G^2) I + beta sum_{s<t} g_s g_s^T,
//   x_t = argmin_W <x, g_{t-1}> + 0.5 ||x - z_{t-1}||^2_{H_t},
//   z_t = argmin_W <x, g_t>     + 0.5 ||x - z_{t-1}||^2_{H_t}.
// W is the ball of the given radius; dense H, so d <= 50.
class StrictlyConvexOmp : public OnlineLearner {
 public:
  static constexpr std::size_t kMaxDim = 50;

  StrictlyConvexOmp(std::size_t dim, double radius, double beta, double gradient_bound);

  const Point& predict() override { return x_; }
  void observe(const RoundLoss& loss) override;
  const Point& search_point() override { return z_; }
  std::string name() const override { return "strict_omp"; }

  // H for the upcoming round.
  const Matrix& curvature() const { return H_; }

 private:
  double radius_, beta_;
  Matrix H_;
  Point z_, x_, last_grad_;
};

}  // namespace smoothcvx
