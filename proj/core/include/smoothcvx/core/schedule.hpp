#pragma once

#include <cstdint>
#include <string>

namespace smoothcvx {

enum class ScheduleKind { constant, inverse_sqrt, inverse_t };

// eta_t for t = 1, 2, ...
class StepSchedule {
 public:
  static StepSchedule constant(double eta);
  static StepSchedule inverse_sqrt(double c);  // c / sqrt(t)
  static StepSchedule inverse_t(double c);     // c / t

  double at(std::uint64_t t) const;
  ScheduleKind kind() const { return kind_; }
  double scale() const { return c_; }
  std::string describe() const;

 private:
  StepSchedule(ScheduleKind k, double c) : kind_(k), c_(c) {}
  ScheduleKind kind_;
  double c_;
};

}  // namespace smoothcvx
