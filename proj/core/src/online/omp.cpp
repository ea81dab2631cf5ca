#include "smoothcvx/online/omp.hpp"

#include <algorithm>
#include <cmath>

#include "smoothcvx/core/errors.hpp"
#include "smoothcvx/core/prox.hpp"

namespace smoothcvx {

double omp_tuned_eta(double smoothness, double egv) {
  const double cap = 1.0 / std::sqrt(2.0);
  if (!(egv > 0.0)) return 0.5 * cap;
  return 0.5 * std::min(cap, smoothness / std::sqrt(egv));
}

Point mirror_center(const MirrorMap& map, const Domain& domain, std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  if (map.kind() == MirrorKind::euclidean) return domain.project(Point::Zero(d));
  if (domain.kind() == DomainKind::simplex) return Point::Constant(d, 1.0 / static_cast<double>(dim));
  // sum x ln x is minimized at x_i = 1/e without constraints; a zero-gradient prox step
  // from there is the Bregman projection onto W.
  const Point free_min = Point::Constant(d, std::exp(-1.0));
  return prox_step(map, domain, free_min, Point::Zero(d), 1.0);
}

namespace {

void check_step(double smoothness, double eta) {
  if (!(smoothness > 0.0)) throw ConfigError("mirror prox needs a positive smoothness constant");
  if (!(eta > 0.0)) throw ConfigError("mirror prox needs a positive step");
}

}  // namespace

Omp::Omp(std::size_t dim, Domain domain, double smoothness, double eta, MirrorMap map)
    : domain_(std::move(domain)), map_(map) {
  check_step(smoothness, eta);
  step_ = eta / smoothness;
  z_ = mirror_center(map_, domain_, dim);
  x_ = z_;
  last_grad_ = Point::Zero(z_.size());
}

void Omp::observe(const RoundLoss& loss) {
  ++counters_.rounds;
  ++counters_.gradients;
  const Point g = loss.gradient(x_);
  z_ = prox_step(map_, domain_, z_, g, step_);
  last_grad_ = g;
  x_ = prox_step(map_, domain_, z_, last_grad_, step_);
}

SimplifiedOmp::SimplifiedOmp(std::size_t dim, Domain domain, double smoothness, double eta, MirrorMap map,
                             bool project_search)
    : domain_(std::move(domain)), map_(map), project_(project_search) {
  check_step(smoothness, eta);
  step_ = eta / smoothness;
  z_ = mirror_center(map_, domain_, dim);
  x_ = z_;
  last_grad_ = Point::Zero(z_.size());
}

void SimplifiedOmp::observe(const RoundLoss& loss) {
  ++counters_.rounds;
  ++counters_.gradients;
  const Point g = loss.gradient(x_);
  const Point theta = map_.grad(x_) + step_ * (last_grad_ - g);
  Point z = map_.grad_inv(theta);
  if (project_) z = prox_step(map_, domain_, z, Point::Zero(z.size()), 1.0);
  z_ = std::move(z);
  last_grad_ = g;
  x_ = prox_step(map_, domain_, z_, last_grad_, step_);
}

CompositeOmp::CompositeOmp(std::size_t dim, Domain domain, double smoothness, double eta, double l1)
    : domain_(std::move(domain)), l1_(l1) {
  check_step(smoothness, eta);
  if (!(l1 >= 0.0)) throw ConfigError("l1 weight must be non-negative");
  step_ = eta / smoothness;
  const auto d = static_cast<Eigen::Index>(dim);
  z_ = domain_.project(Point::Zero(d));
  x_ = z_;
  last_grad_ = Point::Zero(d);
}

void CompositeOmp::observe(const RoundLoss& loss) {
  ++counters_.rounds;
  ++counters_.gradients;
  const Point g = loss.gradient(x_);
  z_ = domain_.project(x_ + step_ * (last_grad_ - g));
  last_grad_ = g;
  x_ = domain_.project(soft_threshold(z_ - step_ * last_grad_, step_ * l1_));
}

}  // namespace smoothcvx
