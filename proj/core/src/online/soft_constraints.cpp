#include "smoothcvx/online/soft_constraints.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "smoothcvx/core/errors.hpp"
#include "smoothcvx/core/rng.hpp"

namespace smoothcvx {

SoftConstants estimate_soft_constants(const std::vector<RoundLoss>& losses,
                                      const std::vector<Domain>& constraints, double R, std::size_t dim,
                                      std::uint64_t seed) {
  if (!(R > 0.0)) throw ConfigError("soft constraints need a positive ball radius");
  Rng rng(seed, 0x50f7);
  const auto d = static_cast<Eigen::Index>(dim);
  std::vector<Point> pts;
  pts.reserve(1000);
  for (int i = 0; i < 1000; ++i) {
    Point x(d);
    for (auto& v : x) v = rng.normal();
    // Half on the sphere, where the extremes of these constants usually sit.
    const double rad = i % 2 ? R : R * std::pow(rng.uniform(), 1.0 / static_cast<double>(dim));
    pts.push_back(x * (rad / x.norm()));
  }
  SoftConstants c;
  c.R = R;
  for (const auto& f : losses) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& x : pts) {
      const double v = f.value(x);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      c.G = std::max(c.G, f.gradient(x).norm());
    }
    c.F = std::max(c.F, hi - lo);
  }
  for (const auto& g : constraints) {
    for (const auto& x : pts) {
      c.D = std::max(c.D, std::abs(g.g(x)));
      c.G = std::max(c.G, g.grad_g(x).norm());
    }
  }
  return c;
}

SoftTuning soft_tuning(const SoftConstants& c, std::size_t m, std::size_t T, SoftVariant variant) {
  if (T == 0) throw ConfigError("soft constraints need a horizon T >= 1");
  const double md = static_cast<double>(m);
  const double G2 = c.G * c.G, D2 = c.D * c.D, R = c.R;
  const double sqrtT = std::sqrt(static_cast<double>(T));
  SoftTuning t;
  switch (variant) {
    case SoftVariant::standard:
    case SoftVariant::penalty:
      t.a = R * std::sqrt((md + 1.0) * G2 + 2.0 * md * D2);
      t.delta = 2.0 * (md + 1.0) * G2;
      break;
    case SoftVariant::no_violation: {
      // a and b depend on each other; iterate to the fixed point.
      t.delta = 4.0 * G2;
      double b = 0.0;
      for (int i = 0; i < 200; ++i) {
        const double a = R * std::sqrt(2.0 * G2 + 3.0 * (D2 + b * b));
        const double nb = 2.0 * std::sqrt(c.F * (t.delta * R * R / a + a / (R * R)));
        t.a = a;
        if (std::abs(nb - b) <= 1e-12 * std::max(1.0, nb)) {
          b = nb;
          break;
        }
        b = nb;
      }
      t.b = b;
      t.gamma = b * std::pow(static_cast<double>(T), -0.25);
      break;
    }
  }
  if (!(t.a > 0.0)) throw ConfigError("soft constraints: G and D cannot both be zero");
  t.eta = R * R / (t.a * sqrtT);
  return t;
}

double soft_violation_bound(const SoftConstants& c, std::size_t m, std::size_t T) {
  const SoftTuning t = soft_tuning(c, m, T, SoftVariant::standard);
  const double sqrtT = std::sqrt(static_cast<double>(T));
  const double R2 = c.R * c.R;
  return std::sqrt(2.0 * (c.F * static_cast<double>(T) + t.a * sqrtT) * sqrtT *
                   (t.delta * R2 / t.a + static_cast<double>(m) * t.a / R2));
}

SoftOgd::SoftOgd(std::size_t dim, std::vector<Domain> constraints, SoftParams p)
    : g_(std::move(constraints)), variant_(p.variant), R_(p.constants.R) {
  if (!(R_ > 0.0)) throw ConfigError("soft constraints need a positive ball radius");
  tuning_ = soft_tuning(p.constants, g_.size(), p.horizon, p.variant);
  if (p.variant == SoftVariant::penalty) {
    tuning_.delta = 0.5;
    tuning_.eta = R_ / (std::max(p.constants.G, 1e-12) * std::sqrt(static_cast<double>(p.horizon)));
  }
  if (p.eta > 0.0) tuning_.eta = p.eta;
  if (p.delta > 0.0) tuning_.delta = p.delta;
  if (p.gamma > 0.0) tuning_.gamma = p.gamma;
  const auto d = static_cast<Eigen::Index>(dim);
  x_ = p.x1.size() ? p.x1 : Point::Zero(d);
  if (x_.size() != d) throw InputError("soft OGD start point has the wrong dimension");
  if (x_.norm() > R_) x_ *= R_ / x_.norm();
  lambda_ = Point::Zero(static_cast<Eigen::Index>(g_.size()));
}

std::string SoftOgd::name() const {
  switch (variant_) {
    case SoftVariant::standard: return "soft_ogd";
    case SoftVariant::no_violation: return "soft_ogd_no_violation";
    case SoftVariant::penalty: return "penalty_ogd";
  }
  return "soft_ogd";
}

void SoftOgd::observe(const RoundLoss& loss) {
  ++counters_.rounds;
  ++counters_.gradients;
  const double eta = tuning_.eta;
  Point step = loss.gradient(x_);
  if (variant_ == SoftVariant::penalty) {
    for (const auto& g : g_)
      if (g.g(x_) > 0.0) step += tuning_.delta * g.grad_g(x_);
  } else {
    for (std::size_t i = 0; i < g_.size(); ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      const double gi = g_[i].g(x_) + tuning_.gamma;
      step += lambda_[k] * g_[i].grad_g(x_);
      lambda_[k] = std::max(0.0, lambda_[k] + eta * (gi - eta * tuning_.delta * lambda_[k]));
    }
  }
  x_ -= eta * step;
  const double n = x_.norm();
  if (n > R_) x_ *= R_ / n;
}

}  // namespace smoothcvx
