#include "smoothcvx/online/doubling.hpp"

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

DoublingWrapper::DoublingWrapper(LearnerFactory factory, double eta0, double smoothness)
    : factory_(std::move(factory)), L_(smoothness), eta_(eta0) {
  if (!factory_) throw ConfigError("doubling needs a learner factory");
  if (!(eta0 > 0.0) || !(smoothness > 0.0)) throw ConfigError("doubling needs eta0 > 0 and L > 0");
  inner_ = factory_(eta_);
}

void DoublingWrapper::observe(const RoundLoss& loss) {
  ++round_;
  ++counters_.rounds;
  if (prev_) {
    const Point& z = inner_->search_point();
    acc_ += (loss.gradient(z) - prev_->gradient(z)).squaredNorm();
    counters_.gradients += 2;
  }
  if (acc_ > L_ * L_ / (eta_ * eta_)) {
    eta_ *= 0.5;
    acc_ = 0.0;
    prev_.reset();
    inner_ = factory_(eta_);
    boundaries_.push_back(round_);
    return;
  }
  inner_->observe(loss);
  prev_ = loss;
}

}  // namespace smoothcvx
