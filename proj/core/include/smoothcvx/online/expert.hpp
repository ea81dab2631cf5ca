#pragma once

#include <cstddef>

#include "smoothcvx/online/learner.hpp"

namespace smoothcvx {

// sqrt(ln m / EGV_inf).
double expert_tuned_eta(std::size_t experts, double egv_inf);

// Mirror prox with the entropy map on the simplex for linear expert losses in [0, 1]:
//   w_t ∝ z_{t-1} exp(-(eta/L) f_{t-1}),  z_t ∝ z_{t-1} exp(-(eta/L) f_t).
// Updates run in log space.
class ExpertOmp : public OnlineLearner {
 public:
  ExpertOmp(std::size_t experts, double eta, double smoothness = 1.0);

  const Point& predict() override { return x_; }
  void observe(const RoundLoss& loss) override;
  const Point& search_point() override { return z_; }
  std::string name() const override { return "expert_omp"; }

 private:
  double step_;
  Point log_z_, z_, x_, last_f_;
};

}  // namespace smoothcvx
