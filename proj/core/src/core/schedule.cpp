#include "smoothcvx/core/schedule.hpp"

#include <cmath>
#include <sstream>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {
namespace {
double checked(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("step size scale must be positive");
  return c;
}
}  // namespace

StepSchedule StepSchedule::constant(double eta) { return {ScheduleKind::constant, checked(eta)}; }
StepSchedule StepSchedule::inverse_sqrt(double c) {
  return {ScheduleKind::inverse_sqrt, checked(c)};
}
StepSchedule StepSchedule::inverse_t(double c) { return {ScheduleKind::inverse_t, checked(c)}; }

double StepSchedule::at(std::uint64_t t) const {
  if (t == 0) throw InputError("step schedules are indexed from t = 1");
  const double tt = static_cast<double>(t);
  switch (kind_) {
    case ScheduleKind::constant: return c_;
    case ScheduleKind::inverse_sqrt: return c_ / std::sqrt(tt);
    case ScheduleKind::inverse_t: return c_ / tt;
  }
  return c_;
}

std::string StepSchedule::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case ScheduleKind::constant: os << "constant(" << c_ << ")"; break;
    case ScheduleKind::inverse_sqrt: os << "inverse_sqrt(" << c_ << ")"; break;
    case ScheduleKind::inverse_t: os << "inverse_t(" << c_ << ")"; break;
  }
  return os.str();
}

}  // namespace smoothcvx
