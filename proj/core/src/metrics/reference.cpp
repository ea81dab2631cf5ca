#include "smoothcvx/metrics/reference.hpp"

#include <cmath>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

ReferenceOptimum reference_optimum(const Objective& problem, const std::optional<Domain>& domain,
                                   std::uint64_t max_iters, double tol) {
  const double L = problem.smoothness();
  if (!(L > 0.0)) throw ConfigError("reference optimum needs a positive smoothness constant");
  auto proj = [&](const Point& x) { return domain ? domain->project(x) : x; };
  const auto d = static_cast<Eigen::Index>(problem.dim());

  Point w = proj(Point::Zero(d));
  Point y = w;
  double theta = 1.0;
  ReferenceOptimum out;
  for (std::uint64_t k = 1; k <= max_iters; ++k) {
    const Point gy = problem.gradient(y);
    const Point w_next = proj(y - gy / L);
    out.iterations = k;
    // Restart when the momentum step points uphill.
    if ((y - w_next).dot(w_next - w) > 0.0) {
      theta = 1.0;
      y = w;
      continue;
    }
    const double theta_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta * theta));
    y = w_next + ((theta - 1.0) / theta_next) * (w_next - w);
    theta = theta_next;
    const double step = (w_next - w).norm();
    w = w_next;
    if (step * L <= tol) {
      const double cert = L * (w - proj(w - problem.gradient(w) / L)).norm();
      if (cert <= tol) break;
    }
  }
  out.w = w;
  out.value = problem.value(w);
  out.certificate = L * (w - proj(w - problem.gradient(w) / L)).norm();
  if (!std::isfinite(out.value)) throw NumericError("reference optimum diverged");
  return out;
}

}  // namespace smoothcvx
