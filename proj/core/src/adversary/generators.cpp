#include "smoothcvx/adversary/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

LossSequence switching_linear(const Point& f, const Point& g, std::size_t T) {
  if (f.size() != g.size()) throw InputError("switching_linear: f and g differ in dimension");
  const std::size_t half = T / 2;
  const double egv = f.squaredNorm() + (half > 0 && half < T ? (g - f).squaredNorm() : 0.0);
  return LossSequence(
      "switching_linear", T, static_cast<std::size_t>(f.size()),
      [f, g, half](std::size_t t) { return RoundLoss::linear(t <= half ? f : g); }, egv);
}

LossSequence constant_sequence(const RoundLoss& loss, std::size_t T) {
  return LossSequence("constant", T, loss.dim(), [loss](std::size_t) { return loss; });
}

LossSequence ftrl_adversary(double eta, std::size_t T, double gv_budget) {
  if (!(eta > 0.0)) throw ConfigError("ftrl_adversary needs eta > 0");
  const double inv = 1.0 / eta;
  const std::size_t s = inv >= 1e18 ? static_cast<std::size_t>(1e18) : static_cast<std::size_t>(std::floor(inv));
  const double sqrtT = std::sqrt(static_cast<double>(T));
  auto lin = [](double v) { return RoundLoss::linear(Point::Constant(1, v)); };

  if (static_cast<double>(s) >= sqrtT) {
    const std::size_t active = s / 2;
    return LossSequence("ftrl_case1", T, 1, [active, lin](std::size_t t) { return lin(t <= active ? 1.0 : 0.0); },
                        active > 0 ? 2.0 : 0.0);
  }
  if (s == 0) {
    return LossSequence("ftrl_case3", T, 1, [lin](std::size_t t) { return lin(t % 2 == 1 ? -1.0 : 1.0); });
  }
  // Each sign flip adds ||2f||^2 = 4 to the variation; stop flipping once the budget is spent.
  const double flips = std::isinf(gv_budget) ? std::numeric_limits<double>::infinity()
                                             : std::max(0.0, std::floor((gv_budget - 1.0) / 4.0));
  const std::size_t active =
      std::isinf(flips) ? T : std::min<std::size_t>(T, static_cast<std::size_t>((flips + 1.0) * static_cast<double>(s)));
  return LossSequence("ftrl_case2", T, 1, [s, active, lin](std::size_t t) {
    if (t > active) return lin(0.0);
    const std::size_t block = (t - 1) / s;
    return lin(block % 2 == 0 ? 1.0 : -1.0);
  });
}

LossSequence drifting_quadratics(double speed, std::size_t T, std::size_t d, double radius) {
  if (!(speed >= 0.0)) throw ConfigError("drifting_quadratics needs speed >= 0");
  if (d < 2) throw ConfigError("drifting_quadratics needs d >= 2");
  const auto n = static_cast<Eigen::Index>(d);
  return LossSequence("drifting_quadratics", T, d, [speed, radius, n](std::size_t t) {
    Point c = Point::Zero(n);
    const double angle = speed * static_cast<double>(t);
    c[0] = radius * std::cos(angle);
    c[1] = radius * std::sin(angle);
    return RoundLoss::quadratic(std::move(c));
  });
}

LossSequence classification_stream(double drift, std::size_t T, std::size_t d, Rng& rng) {
  if (!(drift >= 0.0 && drift <= 2.0)) throw ConfigError("classification_stream needs drift in [0, 2]");
  if (d < 2) throw ConfigError("classification_stream needs d >= 2");
  const auto n = static_cast<Eigen::Index>(d);
  auto walk = std::make_shared<std::vector<Point>>();
  walk->reserve(T);
  Point v(n);
  for (auto& e : v) e = rng.normal();
  v.normalize();
  // Chord length 2 sin(theta / 2) = drift.
  const double theta = 2.0 * std::asin(drift / 2.0);
  for (std::size_t t = 0; t < T; ++t) {
    walk->push_back(v);
    Point u(n);
    for (auto& e : u) e = rng.normal();
    u -= u.dot(v) * v;
    const double un = u.norm();
    if (un == 0.0) continue;
    u /= un;
    v = std::cos(theta) * v + std::sin(theta) * u;
    v.normalize();
  }
  return LossSequence("classification_stream", T, d,
                      [walk](std::size_t t) { return RoundLoss::hinge((*walk)[t - 1]); });
}

LossSequence expert_switch(std::size_t experts, std::size_t T, std::size_t switch_at) {
  if (experts < 2) throw ConfigError("expert_switch needs at least two experts");
  const auto m = static_cast<Eigen::Index>(experts);
  Point first = Point::Ones(m), second = Point::Ones(m);
  first[0] = 0.0;
  second[1] = 0.0;
  // ||f_1||_inf^2 + one switch with ||second - first||_inf^2 = 1.
  const double egv = 1.0 + (switch_at >= 1 && switch_at < T ? 1.0 : 0.0);
  return LossSequence(
      "expert_switch", T, experts,
      [first, second, switch_at](std::size_t t) { return RoundLoss::linear(t <= switch_at ? first : second); },
      egv);
}

LossSequence linear_with_variation(double egv, std::size_t T, std::size_t d) {
  if (!(egv > 0.0)) throw ConfigError("linear_with_variation needs egv > 0");
  const std::size_t K = std::max<std::size_t>(2, 2 * static_cast<std::size_t>(std::llround((egv + 2.0) / 8.0)));
  if (K > T) throw ConfigError("linear_with_variation: T too small for the requested variation");
  const double a = std::sqrt(egv / (4.0 * static_cast<double>(K) - 2.0));
  const auto n = static_cast<Eigen::Index>(d);
  return LossSequence(
      "linear_with_variation", T, d,
      [a, K, n](std::size_t t) {
        Point f = Point::Zero(n);
        if (t <= K) f[0] = t % 2 == 1 ? a : -a;
        return RoundLoss::linear(std::move(f));
      },
      egv);
}

}  // namespace smoothcvx
