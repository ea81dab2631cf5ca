#include "smoothcvx/online/explicit_max.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

namespace {

Point project_dual(const Point& u, DualSet q) {
  if (q == DualSet::simplex) return project_simplex(u);
  return u.cwiseMax(0.0).cwiseMin(1.0);
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

Point project_ball(const Point& x, double r) {
  const double n = x.norm();
  return n > r ? Point(x * (r / n)) : x;
}

}  // namespace

ExplicitMaxPd::ExplicitMaxPd(std::size_t dim, Domain domain, double smoothness, double eta)
    : domain_(std::move(domain)) {
  if (!(smoothness > 0.0) || !(eta > 0.0)) throw ConfigError("primal-dual prox needs L > 0 and eta > 0");
  step_ = eta / smoothness;
  z_ = domain_.project(Point::Zero(static_cast<Eigen::Index>(dim)));
  x_ = z_;
}

void ExplicitMaxPd::observe(const RoundLoss& loss) {
  const MaxParts* parts = loss.max_parts();
  if (parts == nullptr) throw InputError("primal-dual prox needs a loss with a max structure");
  if (static_cast<std::size_t>(parts->A.cols()) != static_cast<std::size_t>(x_.size()))
    throw InputError("A_t has " + std::to_string(parts->A.cols()) + " columns for a decision of dimension " +
                     std::to_string(x_.size()));
  const auto m = parts->A.rows();
  if (v_.size() == 0) {
    // Minimizer of 0.5||u||^2 over Q.
    v_ = parts->dual == DualSet::simplex ? Point::Constant(m, 1.0 / static_cast<double>(m)) : Point::Zero(m);
    u_ = v_;
  } else if (v_.size() != m) {
    throw InputError("A_t changed its number of rows from " + std::to_string(v_.size()) + " to " +
                     std::to_string(m));
  }
  ++counters_.rounds;
  ++counters_.gradients;
  const Point dual_dir = parts->A * x_ - parts->c;
  Point primal_dir = parts->A.transpose() * u_;
  if (parts->fhat_gradient) primal_dir += parts->fhat_gradient(x_);
  v_ = project_dual(v_ + step_ * dual_dir, parts->dual);
  z_ = domain_.project(z_ - step_ * primal_dir);
  // Next round's pair uses this round's pieces; x_{t+1} needs u_t, so it goes first.
  x_ = domain_.project(z_ - step_ * primal_dir);
  u_ = project_dual(v_ + step_ * dual_dir, parts->dual);
}

double HingeMistakeLearner::tuned_eta(double egv) {
  const double cap = 1.0 / (2.0 * std::sqrt(2.0));
  if (!(egv > 0.0)) return cap;
  return std::min(cap, 1.0 / std::sqrt(2.0 * egv));
}

HingeMistakeLearner::HingeMistakeLearner(std::size_t dim, double radius, double eta)
    : radius_(radius), eta_(eta) {
  if (!(radius > 0.0) || !(eta > 0.0)) throw ConfigError("hinge learner needs R > 0 and eta > 0");
  w_ = Point::Zero(static_cast<Eigen::Index>(dim));
  w_aux_ = w_;
}

void HingeMistakeLearner::observe(const RoundLoss& loss) {
  if (loss.kind() != LossKind::hinge) throw InputError("hinge learner needs hinge losses");
  const Point& yx = loss.vector();
  if (yx.size() != w_.size()) throw InputError("example dimension does not match the model");
  ++counters_.rounds;
  const double margin = w_.dot(yx);
  last_mistake_ = margin <= 0.0;
  if (!last_mistake_) return;
  ++mistakes_;
  ++counters_.gradients;
  beta_ = clamp01(beta_ + eta_ * (1.0 - margin));
  w_aux_ = project_ball(w_aux_ + eta_ * alpha_ * yx, radius_);
  const double next_alpha = clamp01(beta_ + eta_ * (1.0 - margin));
  w_ = project_ball(w_aux_ + eta_ * alpha_ * yx, radius_);
  alpha_ = next_alpha;
}

}  // namespace smoothcvx
