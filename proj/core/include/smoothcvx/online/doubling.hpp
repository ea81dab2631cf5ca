#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "smoothcvx/online/learner.hpp"

namespace smoothcvx {

using LearnerFactory = std::function<std::unique_ptr<OnlineLearner>(double eta)>;

// Runs a fixed-step learner in epochs with eta_k = eta0 / 2^k. Epoch k keeps
//   sum_{s} ||grad f_{s+1}(z_s) - grad f_s(z_s)||^2 <= L^2 / eta_k^2
// and a fresh learner starts after the first round that breaks it. That round is burned:
// its decision came from the old learner and the new learner never sees it.
class DoublingWrapper : public OnlineLearner {
 public:
  DoublingWrapper(LearnerFactory factory, double eta0, double smoothness);

  const Point& predict() override { return inner_->predict(); }
  void observe(const RoundLoss& loss) override;
  const Point& search_point() override { return inner_->search_point(); }
  std::string name() const override { return "doubling(" + inner_->name() + ")"; }

  std::size_t epochs() const { return boundaries_.size(); }
  // First round of each epoch (1-based); boundaries()[0] == 1.
  const std::vector<std::uint64_t>& boundaries() const { return boundaries_; }
  double current_eta() const { return eta_; }

 private:
  LearnerFactory factory_;
  double L_;
  double eta_;
  double acc_ = 0.0;
  std::uint64_t round_ = 0;
  std::unique_ptr<OnlineLearner> inner_;
  std::optional<RoundLoss> prev_;
  std::vector<std::uint64_t> boundaries_{1};
};

}  // namespace smoothcvx
