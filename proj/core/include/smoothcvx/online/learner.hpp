#pragma once

#include <cstdint>
#include <string>

#include "smoothcvx/core/types.hpp"
#include "smoothcvx/online/round_loss.hpp"

namespace smoothcvx {

struct LearnerCounters {
  std::uint64_t rounds = 0;
  std::uint64_t gradients = 0;  // gradient evaluations of round losses
  std::uint64_t values = 0;     // value queries (bandit feedback)
};

// Pull-based round protocol: predict() returns x_t, then observe(f_t) updates the state.
// predict() is idempotent within a round.
class OnlineLearner {
 public:
  virtual ~OnlineLearner() = default;

  virtual const Point& predict() = 0;
  virtual void observe(const RoundLoss& loss) = 0;
  virtual std::string name() const = 0;
  // Searching point z_{t-1} for two-sequence learners; the decision otherwise.
  virtual const Point& search_point() { return predict(); }

  const LearnerCounters& counters() const { return counters_; }

 protected:
  LearnerCounters counters_;
};

}  // namespace smoothcvx
