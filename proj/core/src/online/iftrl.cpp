#include "smoothcvx/online/iftrl.hpp"

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

Iftrl::Iftrl(std::size_t dim, Domain domain, double smoothness, double eta) : domain_(std::move(domain)) {
  if (!(smoothness > 0.0)) throw ConfigError("iftrl needs a positive smoothness constant");
  if (!(eta > 0.0 && eta <= 1.0)) throw ConfigError("iftrl needs eta in (0, 1]");
  step_ = eta / smoothness;
  const auto d = static_cast<Eigen::Index>(dim);
  sum_grad_ = Point::Zero(d);
  z_ = domain_.project(Point::Zero(d));
  x_ = z_;
}

void Iftrl::observe(const RoundLoss& loss) {
  ++counters_.rounds;
  counters_.gradients += 2;
  sum_grad_ += loss.gradient(z_);  // grad f_t(z_{t-1})
  z_ = domain_.project(-step_ * sum_grad_);
  x_ = domain_.project(z_ - step_ * loss.gradient(z_));
}

}  // namespace smoothcvx
