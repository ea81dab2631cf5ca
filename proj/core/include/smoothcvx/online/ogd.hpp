#pragma once

#include <cstddef>

#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/core/schedule.hpp"
#include "smoothcvx/online/learner.hpp"

namespace smoothcvx {

// w_{t+1} = P_W(w_t - eta_t grad f_t(w_t)). Starts at P_W(0) unless x1 is given.
class Ogd : public OnlineLearner {
 public:
  Ogd(std::size_t dim, Domain domain, StepSchedule schedule, Point x1 = Point());

  const Point& predict() override { return x_; }
  void observe(const RoundLoss& loss) override;
  std::string name() const override { return "ogd"; }

 private:
  Domain domain_;
  StepSchedule schedule_;
  Point x_;
};

}  // namespace smoothcvx
