#include "smoothcvx/core/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}  // namespace

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::ball: return "ball";
    case DomainKind::box: return "box";
    case DomainKind::simplex: return "simplex";
    case DomainKind::l1_ball: return "l1_ball";
    case DomainKind::halfspace: return "halfspace";
  }
  return "unknown";
}

Domain Domain::ball(double r, Point center) {
  if (!(r > 0.0)) throw ConfigError("ball radius must be positive");
  Domain d;
  d.kind_ = DomainKind::ball;
  d.r_ = r;
  d.center_ = std::move(center);
  return d;
}

Domain Domain::box(Point lo, Point hi) {
  if (lo.size() != hi.size()) throw InputError("box bounds differ in dimension");
  for (Eigen::Index i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw ConfigError("empty box: lo > hi at coordinate " + std::to_string(i));
  Domain d;
  d.kind_ = DomainKind::box;
  d.lo_ = std::move(lo);
  d.hi_ = std::move(hi);
  return d;
}

Domain Domain::simplex() {
  Domain d;
  d.kind_ = DomainKind::simplex;
  return d;
}

Domain Domain::l1_ball(double r) {
  if (!(r > 0.0)) throw ConfigError("l1 ball radius must be positive");
  Domain d;
  d.kind_ = DomainKind::l1_ball;
  d.r_ = r;
  return d;
}

Domain Domain::halfspace(Point a, double b) {
  if (!(a.norm() > 0.0)) throw ConfigError("halfspace normal must be non-zero");
  Domain d;
  d.kind_ = DomainKind::halfspace;
  d.a_ = std::move(a);
  d.b_ = b;
  return d;
}

void Domain::check_dim(const Point& x) const {
  Eigen::Index need = -1;
  if (kind_ == DomainKind::ball && center_.size() > 0) need = center_.size();
  if (kind_ == DomainKind::box) need = lo_.size();
  if (kind_ == DomainKind::halfspace) need = a_.size();
  if (need >= 0 && x.size() != need)
    throw InputError("dimension mismatch: domain has " + std::to_string(need) + ", point has " +
                     std::to_string(x.size()));
  if (x.size() == 0) throw InputError("empty point");
}

double Domain::g(const Point& x) const {
  check_dim(x);
  switch (kind_) {
    case DomainKind::ball: {
      const double n2 = center_.size() ? (x - center_).squaredNorm() : x.squaredNorm();
      return n2 - r_ * r_;
    }
    case DomainKind::box: return std::max((lo_ - x).maxCoeff(), (x - hi_).maxCoeff());
    case DomainKind::simplex: {
      const double s = x.sum();
      return std::max({s - 1.0, 1.0 - s, (-x).maxCoeff()});
    }
    case DomainKind::l1_ball: return x.lpNorm<1>() - r_;
    case DomainKind::halfspace: return a_.dot(x) - b_;
  }
  return 0.0;
}

Point Domain::grad_g(const Point& x) const {
  check_dim(x);
  const auto d = x.size();
  switch (kind_) {
    case DomainKind::ball: return 2.0 * (center_.size() ? Point(x - center_) : x);
    case DomainKind::box: {
      Eigen::Index ilo, ihi;
      const double vlo = (lo_ - x).maxCoeff(&ilo);
      const double vhi = (x - hi_).maxCoeff(&ihi);
      Point gr = Point::Zero(d);
      if (vlo >= vhi) gr[ilo] = -1.0;
      else gr[ihi] = 1.0;
      return gr;
    }
    case DomainKind::simplex: {
      const double s = x.sum();
      Eigen::Index im;
      const double neg = (-x).maxCoeff(&im);
      if (s - 1.0 >= std::max(1.0 - s, neg)) return Point::Ones(d);
      if (1.0 - s >= neg) return Point(-Point::Ones(d));
      Point gr = Point::Zero(d);
      gr[im] = -1.0;
      return gr;
    }
    case DomainKind::l1_ball: return x.unaryExpr([](double v) { return double((v > 0) - (v < 0)); });
    case DomainKind::halfspace: return a_;
  }
  return Point::Zero(d);
}

bool Domain::contains(const Point& x, double tol) const {
  if (kind_ == DomainKind::simplex) {
    check_dim(x);
    return std::abs(x.sum() - 1.0) <= tol && (x.array() >= -tol).all();
  }
  return g(x) <= tol;
}

Point project_simplex(const Point& x, double z) {
  const auto d = x.size();
  std::vector<Eigen::Index> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return x[a] > x[b]; });
  double cum = 0.0, theta = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    cum += x[order[k]];
    const double t = (cum - z) / static_cast<double>(k + 1);
    if (x[order[k]] - t > 0.0) theta = t;
  }
  return (x.array() - theta).max(0.0).matrix();
}

Point project_l1_ball(const Point& x, double r) {
  if (x.lpNorm<1>() <= r) return x;
  const Point w = project_simplex(x.cwiseAbs(), r);
  return x.unaryExpr([](double v) { return double((v > 0) - (v < 0)); }).cwiseProduct(w);
}

Point Domain::project(const Point& x) const {
  check_dim(x);
  switch (kind_) {
    case DomainKind::ball: {
      const Point c = center_.size() ? center_ : Point::Zero(x.size());
      const double n = (x - c).norm();
      // Points within rounding of the sphere are kept, so projecting twice is bitwise stable.
      if (n <= r_ * (1.0 + 8.0 * kEps)) return x;
      return c + (r_ / n) * (x - c);
    }
    case DomainKind::box: return x.cwiseMax(lo_).cwiseMin(hi_);
    case DomainKind::simplex: return project_simplex(x, 1.0);
    case DomainKind::l1_ball: return project_l1_ball(x, r_);
    case DomainKind::halfspace: {
      const double v = a_.dot(x) - b_;
      if (v <= 64.0 * kEps * (std::abs(b_) + a_.cwiseAbs().dot(x.cwiseAbs()))) return x;
      return x - (v / a_.squaredNorm()) * a_;
    }
  }
  return x;
}

Point Domain::linear_minimizer(const Point& grad) const {
  check_dim(grad);
  const auto d = grad.size();
  switch (kind_) {
    case DomainKind::ball: {
      const Point c = center_.size() ? center_ : Point::Zero(d);
      const double n = grad.norm();
      if (n == 0.0) return c;
      return c - (r_ / n) * grad;
    }
    case DomainKind::box: {
      Point p(d);
      for (Eigen::Index i = 0; i < d; ++i) p[i] = grad[i] > 0 ? lo_[i] : hi_[i];
      return p;
    }
    case DomainKind::simplex: {
      Eigen::Index i;
      grad.minCoeff(&i);
      Point p = Point::Zero(d);
      p[i] = 1.0;
      return p;
    }
    case DomainKind::l1_ball: {
      Eigen::Index i;
      grad.cwiseAbs().maxCoeff(&i);
      Point p = Point::Zero(d);
      p[i] = grad[i] > 0 ? -r_ : r_;
      return p;
    }
    case DomainKind::halfspace: break;
  }
  throw UnsupportedError("no linear minimization oracle for " + to_string(kind_));
}

DomainConstants Domain::constants(std::size_t dim, double outer) const {
  DomainConstants c;
  const double sd = std::sqrt(static_cast<double>(dim));
  const double inf = std::numeric_limits<double>::infinity();
  switch (kind_) {
    case DomainKind::ball: {
      const double cn = center_.size() ? center_.norm() : 0.0;
      c.rho = 2.0 * r_;
      c.G2 = 2.0 * (outer + cn);
      c.C2 = std::max(r_ * r_, (outer + cn) * (outer + cn) - r_ * r_);
      c.R = cn + r_;
      break;
    }
    case DomainKind::box: {
      const double m = std::max(lo_.cwiseAbs().maxCoeff(), hi_.cwiseAbs().maxCoeff());
      c.rho = 1.0;
      c.G2 = 1.0;
      c.C2 = outer + m;
      c.R = lo_.cwiseAbs().cwiseMax(hi_.cwiseAbs()).norm();
      break;
    }
    case DomainKind::simplex:
      c.rho = 1.0;
      c.G2 = sd;
      c.C2 = sd * outer + 1.0;
      c.R = 1.0;
      break;
    case DomainKind::l1_ball:
      c.rho = 1.0;
      c.G2 = sd;
      c.C2 = std::max(r_, sd * outer - r_);
      c.R = r_;
      break;
    case DomainKind::halfspace:
      c.rho = a_.norm();
      c.G2 = a_.norm();
      c.C2 = a_.norm() * outer + std::abs(b_);
      c.R = inf;
      break;
  }
  return c;
}

Point project_two_balls(const Point& x, const Point& c1, double r1, const Point& c2, double r2) {
  const double D = (c2 - c1).norm();
  if (D > r1 + r2 + 1e-15) throw NumericError("two-ball intersection is empty");
  const Point p1 = Domain::ball(r1, c1).project(x);
  if ((p1 - c2).norm() <= r2 * (1 + 1e-15)) return p1;
  const Point p2 = Domain::ball(r2, c2).project(x);
  if ((p2 - c1).norm() <= r1 * (1 + 1e-15)) return p2;
  // Both constraints active: nearest point on the intersection of the two spheres.
  const Point u = (c2 - c1) / D;
  const double h = (D * D + r1 * r1 - r2 * r2) / (2.0 * D);
  const double rad = std::sqrt(std::max(0.0, r1 * r1 - h * h));
  const Point c = c1 + h * u;
  Point v = (x - c) - (x - c).dot(u) * u;
  double vn = v.norm();
  if (vn == 0.0) {
    // x on the axis: any point of the circle is nearest.
    Eigen::Index i;
    u.cwiseAbs().minCoeff(&i);
    v = Point::Zero(x.size());
    v[i] = 1.0;
    v -= v.dot(u) * u;
    vn = v.norm();
    if (vn == 0.0) return c;
  }
  return c + (rad / vn) * v;
}

Point dykstra_project(const Domain& a, const Domain& b, const Point& x, int max_rounds, double tol) {
  Point y = x, p = Point::Zero(x.size()), q = Point::Zero(x.size());
  Point z = x;
  for (int k = 0; k < max_rounds; ++k) {
    const Point yn = a.project(z + p);
    p = z + p - yn;
    const Point zn = b.project(yn + q);
    q = yn + q - zn;
    const double change = (zn - z).norm() + (yn - y).norm();
    y = yn;
    z = zn;
    if (change <= tol) break;
  }
  return z;
}

}  // namespace smoothcvx
