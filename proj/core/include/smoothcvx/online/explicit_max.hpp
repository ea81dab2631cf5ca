#pragma once

#include <cstddef>
#include <cstdint>

#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/online/learner.hpp"

namespace smoothcvx {

// Primal-dual mirror prox (Euclidean on both sides) for losses with a max structure
//   f_t(x) = fhat_t(x) + max_{u in Q} <A_t x, u> - <c_t, u>.
// Four updates per round:
//   u_t = P_Q(v_{t-1} + (eta/L)(A_{t-1} x_{t-1} - c_{t-1}))
//   x_t = P_W(z_{t-1} - (eta/L)(grad fhat_{t-1}(x_{t-1}) + A_{t-1}^T u_{t-1}))
//   v_t = P_Q(v_{t-1} + (eta/L)(A_t x_t - c_t))
//   z_t = P_W(z_{t-1} - (eta/L)(grad fhat_t(x_t) + A_t^T u_t))
class ExplicitMaxPd : public OnlineLearner {
 public:
  ExplicitMaxPd(std::size_t dim, Domain domain, double smoothness, double eta);

  const Point& predict() override { return x_; }
  void observe(const RoundLoss& loss) override;
  const Point& search_point() override { return z_; }
  std::string name() const override { return "explicit_max_pd"; }

  const Point& dual() const { return u_; }
  const Point& dual_search() const { return v_; }

 private:
  Domain domain_;
  double step_;
  Point x_, z_, u_, v_;
};

// Mistake-driven hinge specialization on ||w|| <= R, Q = [0, 1]. On a mistake
// (<w_t, y_t x_t> <= 0):
//   beta_t    = P[0,1](beta_{t-1} + eta (1 - <w_t, y_t x_t>))
//   w'_t      = P_R(w'_{t-1} + eta alpha_t y_t x_t)
//   alpha_t+1 = P[0,1](beta_t + eta (1 - <w_t, y_t x_t>))
//   w_{t+1}   = P_R(w'_t + eta alpha_t y_t x_t)
// Otherwise nothing changes.
class HingeMistakeLearner : public OnlineLearner {
 public:
  // Step that balances the variation and range terms of the mistake bound,
  // min(1/(2 sqrt2), 1/sqrt(2 EGV)).
  static double tuned_eta(double egv);

  HingeMistakeLearner(std::size_t dim, double radius, double eta);

  const Point& predict() override { return w_; }
  void observe(const RoundLoss& loss) override;
  const Point& search_point() override { return w_aux_; }
  std::string name() const override { return "hinge_pd"; }

  std::uint64_t mistakes() const { return mistakes_; }
  bool last_was_mistake() const { return last_mistake_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double radius_, eta_;
  Point w_, w_aux_;
  double alpha_ = 0.0, beta_ = 0.0;
  std::uint64_t mistakes_ = 0;
  bool last_mistake_ = false;
};

}  // namespace smoothcvx
