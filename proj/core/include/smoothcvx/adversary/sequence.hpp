#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "smoothcvx/core/trace.hpp"
#include "smoothcvx/online/round_loss.hpp"

namespace smoothcvx {

// f_1..f_T given by a pure generator of the 1-based round index. Immutable.
class LossSequence {
 public:
  using Generator = std::function<RoundLoss(std::size_t t)>;

  LossSequence(std::string kind, std::size_t rounds, std::size_t dim, Generator gen,
               double declared_egv = kNaN);

  RoundLoss at(std::size_t t) const;
  std::size_t rounds() const { return T_; }
  std::size_t dim() const { return dim_; }
  const std::string& kind() const { return kind_; }
  double declared_egv() const { return egv_; }

 private:
  std::string kind_;
  std::size_t T_;
  std::size_t dim_;
  Generator gen_;
  double egv_;
};

}  // namespace smoothcvx
