#include "smoothcvx/online/ogd.hpp"

namespace smoothcvx {

Ogd::Ogd(std::size_t dim, Domain domain, StepSchedule schedule, Point x1)
    : domain_(std::move(domain)), schedule_(schedule) {
  x_ = x1.size() ? domain_.project(x1) : domain_.project(Point::Zero(static_cast<Eigen::Index>(dim)));
}

void Ogd::observe(const RoundLoss& loss) {
  ++counters_.rounds;
  ++counters_.gradients;
  x_ = domain_.project(x_ - schedule_.at(counters_.rounds) * loss.gradient(x_));
}

}  // namespace smoothcvx
