#pragma once

#include <cstdint>

#include "smoothcvx/core/objective.hpp"

namespace smoothcvx {

struct OracleCounters {
  std::uint64_t full = 0;
  std::uint64_t stochastic = 0;
  std::uint64_t value = 0;
  std::uint64_t projection = 0;
};

// A drawn random function; evaluating it does not touch the counters again.
class Component {
 public:
  Component(const Objective& obj, std::uint64_t token) : obj_(&obj), token_(token) {}
  double value(const Point& w) const { return obj_->sample_value(token_, w); }
  Point gradient(const Point& w) const { return obj_->sample_gradient(token_, w); }
  std::uint64_t token() const { return token_; }

 private:
  const Objective* obj_;
  std::uint64_t token_;
};

// Counting front-end to an objective's full and stochastic oracles.
class OracleSet {
 public:
  explicit OracleSet(const Objective& obj) : obj_(obj) {}

  Point full_gradient(const Point& w) {
    ++counters_.full;
    return obj_.gradient(w);
  }
  Point stochastic_gradient(const Point& w, Rng& rng) {
    ++counters_.stochastic;
    return obj_.sample_gradient(obj_.draw(rng), w);
  }
  Component component(Rng& rng) {
    ++counters_.stochastic;
    return Component(obj_, obj_.draw(rng));
  }
  double value(const Point& w) {
    ++counters_.value;
    return obj_.value(w);
  }
  void count_projection() { ++counters_.projection; }

  const Objective& objective() const { return obj_; }
  const OracleCounters& counters() const { return counters_; }

 private:
  const Objective& obj_;
  OracleCounters counters_;
};

}  // namespace smoothcvx
