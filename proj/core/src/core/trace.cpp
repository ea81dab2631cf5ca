#include "smoothcvx/core/trace.hpp"

#include <cstring>
#include <sstream>

namespace smoothcvx {
namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

bool same_point(const Point& a, const Point& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!same_bits(a[i], b[i])) return false;
  return true;
}

}  // namespace

void Trace::note(const std::string& key, double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  header[key] = os.str();
}

bool identical(const Trace& a, const Trace& b) {
  if (a.seed != b.seed || a.header != b.header || a.records.size() != b.records.size()) return false;
  if (!same_point(a.solution, b.solution)) return false;
  const auto& ca = a.counters;
  const auto& cb = b.counters;
  if (ca.full != cb.full || ca.stochastic != cb.stochastic || ca.value != cb.value ||
      ca.projection != cb.projection)
    return false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto& x = a.records[i];
    const auto& y = b.records[i];
    if (x.iter != y.iter || x.calls_stochastic != y.calls_stochastic ||
        x.calls_full != y.calls_full)
      return false;
    if (!same_bits(x.objective, y.objective) || !same_bits(x.suboptimality, y.suboptimality) ||
        !same_bits(x.constraint, y.constraint) || !same_bits(x.dual, y.dual) ||
        !same_bits(x.variance_sgd, y.variance_sgd) || !same_bits(x.variance_mixed, y.variance_mixed) ||
        !same_bits(x.radius, y.radius))
      return false;
    if (!same_point(x.iterate, y.iterate)) return false;
  }
  return true;
}

}  // namespace smoothcvx
