#include "smoothcvx/core/prox.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {
namespace {

constexpr int kMaxBisection = 200;

Point floor_entropy(Point x) { return x.cwiseMax(kEntropyFloor); }

// Solves u e^{k u} = w for u >= 0 (k > 0, w > 0) by Newton on log form.
double solve_ueku(double w, double k) {
  if (w <= 0.0) return 0.0;
  // u = W(k w) / k; Newton on h(v) = v + ln v - ln(kw) with v = k u.
  const double target = std::log(k * w);
  double v = target > 1.0 ? target - std::log(target) : k * w / (1.0 + k * w);
  if (v <= 0.0) v = 1e-300;
  for (int it = 0; it < 100; ++it) {
    const double h = v + std::log(v) - target;
    const double step = h / (1.0 + 1.0 / v);
    double vn = v - step;
    if (vn <= 0.0) vn = 0.5 * v;
    if (std::abs(vn - v) <= 1e-15 * std::max(1.0, v)) {
      v = vn;
      break;
    }
    v = vn;
  }
  return v / k;
}

template <class Residual>
double bisect_multiplier(Residual residual, const char* what) {
  // residual(nu) is non-increasing, positive at 0; find its root.
  double lo = 0.0, hi = 1.0;
  int grow = 0;
  while (residual(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++grow > 1100) throw NumericError(std::string(what) + ": multiplier bracket failed");
  }
  for (int it = 0; it < kMaxBisection; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) > 0.0) lo = mid;
    else hi = mid;
    if (hi - lo <= 1e-15 * std::max(1.0, hi)) return hi;
  }
  throw NumericError(std::string(what) + ": bisection did not converge in 200 steps");
}

Point entropy_prox(const Domain& domain, const Point& z, const Point& g, double eta) {
  if ((z.array() <= 0.0).any()) throw DomainError("entropy prox needs a positive center");
  const Point w = floor_entropy((z.array() * (-eta * g.array()).exp()).matrix());
  switch (domain.kind()) {
    case DomainKind::simplex: {
      // shift in log space for stability
      const Eigen::ArrayXd logw = z.array().log() - eta * g.array();
      const Eigen::ArrayXd e = (logw - logw.maxCoeff()).exp();
      return floor_entropy((e / e.sum()).matrix());
    }
    case DomainKind::box: {
      if ((domain.lo().array() < 0.0).any())
        throw UnsupportedError("entropy prox on a box needs lo >= 0");
      return floor_entropy(w.cwiseMax(domain.lo()).cwiseMin(domain.hi()));
    }
    case DomainKind::l1_ball: {
      const double s = w.sum();
      if (s <= domain.radius_param()) return w;
      return floor_entropy(w * (domain.radius_param() / s));
    }
    case DomainKind::halfspace: {
      const Point& a = domain.normal();
      if (a.dot(w) <= domain.offset()) return w;
      auto at = [&](double nu) { return Point((w.array() * (-nu * a.array()).exp()).matrix()); };
      const double nu = bisect_multiplier(
          [&](double n) { return a.dot(at(n)) - domain.offset(); }, "entropy halfspace prox");
      return floor_entropy(at(nu));
    }
    case DomainKind::ball: {
      if (domain.center().size() > 0 && domain.center().norm() > 0.0)
        throw UnsupportedError("entropy prox on a shifted ball");
      const double r = domain.radius_param();
      if (w.norm() <= r) return w;
      // stationarity: ln u_i + 2 nu u_i = ln w_i
      auto at = [&](double nu) {
        Point u(w.size());
        for (Eigen::Index i = 0; i < w.size(); ++i) u[i] = solve_ueku(w[i], 2.0 * nu);
        return u;
      };
      const double nu =
          bisect_multiplier([&](double n) { return at(n).norm() - r; }, "entropy ball prox");
      return floor_entropy(at(nu));
    }
  }
  throw UnsupportedError("entropy prox: unsupported domain");
}

}  // namespace

Point prox_step(const MirrorMap& map, const Domain& domain, const Point& z, const Point& g,
                double eta) {
  if (!(eta > 0.0)) throw ConfigError("prox_step: eta must be positive");
  if (z.size() != g.size()) throw InputError("prox_step: dimension mismatch");
  if (map.kind() == MirrorKind::euclidean) return domain.project(z - eta * g);
  return entropy_prox(domain, z, g, eta);
}

Point mahalanobis_ball_prox(const Matrix& H, const Point& z, const Point& g, double r,
                            const Point& center) {
  const auto d = z.size();
  if (H.rows() != d || H.cols() != d || g.size() != d) throw InputError("mahalanobis prox: shape");
  const Point c = center.size() ? center : Point::Zero(d);
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw NumericError("mahalanobis prox: H is not positive definite");
  const Matrix& Q = es.eigenvectors();
  const Point& lam = es.eigenvalues();
  // (H + nu I)(u - c) = H (z - c) - g
  const Point b = H * (z - c) - g;
  const Point qb = Q.transpose() * b;
  auto offset = [&](double nu) {
    return Point(Q * (qb.array() / (lam.array() + nu)).matrix());
  };
  Point v = offset(0.0);
  if (v.norm() <= r) return c + v;
  double lo = 0.0, hi = b.norm() / r;
  for (int it = 0; it < kMaxBisection; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double n = offset(mid).norm();
    if (n > r) lo = mid;
    else hi = mid;
    if (std::abs(n - r) <= 1e-10 || hi - lo <= 1e-15 * std::max(1.0, hi)) break;
    if (it == kMaxBisection - 1) throw NumericError("mahalanobis prox: bisection failed");
  }
  v = offset(hi);
  const double n = v.norm();
  if (n > r) v *= r / n;
  return c + v;
}

Point clip_component(double gamma, const Point& g) {
  if (!(gamma > 0.0)) throw ConfigError("clip level gamma must be positive");
  return g.cwiseMax(-gamma).cwiseMin(gamma);
}

Point soft_threshold(const Point& z, double t) {
  return (z.array().sign() * (z.array().abs() - t).max(0.0)).matrix();
}

}  // namespace smoothcvx
