#include "smoothcvx/online/expert.hpp"

#include <cmath>
#include <string>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

double expert_tuned_eta(std::size_t experts, double egv_inf) {
  if (experts < 2) throw ConfigError("expert advice needs at least two experts");
  if (!(egv_inf > 0.0)) throw ConfigError("EGV_inf must be positive to tune eta");
  return std::sqrt(std::log(static_cast<double>(experts)) / egv_inf);
}

namespace {

// exp(v - logsumexp(v)), renormalized so the entries sum to one.
Point softmax(const Point& v) {
  const double top = v.maxCoeff();
  Point e = (v.array() - top).exp().matrix();
  return e / e.sum();
}

Point log_normalize(const Point& v) {
  const double top = v.maxCoeff();
  return (v.array() - (top + std::log((v.array() - top).exp().sum()))).matrix();
}

}  // namespace

ExpertOmp::ExpertOmp(std::size_t experts, double eta, double smoothness) {
  if (experts < 1) throw ConfigError("expert advice needs at least one expert");
  if (!(eta > 0.0) || !(smoothness > 0.0)) throw ConfigError("expert OMP needs positive eta and L");
  step_ = eta / smoothness;
  const auto m = static_cast<Eigen::Index>(experts);
  log_z_ = Point::Constant(m, -std::log(static_cast<double>(experts)));
  z_ = Point::Constant(m, 1.0 / static_cast<double>(experts));
  x_ = z_;
  last_f_ = Point::Zero(m);
}

void ExpertOmp::observe(const RoundLoss& loss) {
  if (loss.kind() != LossKind::linear) throw InputError("expert OMP needs linear losses");
  const Point& f = loss.vector();
  if (f.size() != z_.size())
    throw InputError("loss vector has " + std::to_string(f.size()) + " entries for " +
                     std::to_string(z_.size()) + " experts");
  if ((f.array() < 0.0).any()) throw InputError("expert losses must be non-negative");
  ++counters_.rounds;
  ++counters_.gradients;
  log_z_ = log_normalize(log_z_ - step_ * f);
  z_ = softmax(log_z_);
  last_f_ = f;
  x_ = softmax(log_z_ - step_ * last_f_);
}

}  // namespace smoothcvx
