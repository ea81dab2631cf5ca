#pragma once

#include <cmath>
#include <functional>

#include "smoothcvx/core/rng.hpp"
#include "smoothcvx/core/types.hpp"

namespace testing {

using smoothcvx::Point;

inline Point random_point(smoothcvx::Rng& rng, Eigen::Index d, double scale = 1.0) {
  Point x(d);
  for (auto& v : x) v = scale * rng.normal();
  return x;
}

inline Point vec(std::initializer_list<double> v) {
  Point x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double a : v) x[i++] = a;
  return x;
}

// Central differences with step h (1 + ||w||) as the test oracle for gradients.
inline Point finite_difference(const std::function<double(const Point&)>& f, const Point& w,
                               double h = 1e-5) {
  const double step = h * (1.0 + w.norm());
  Point g(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    Point a = w, b = w;
    a[i] += step;
    b[i] -= step;
    g[i] = (f(a) - f(b)) / (2.0 * step);
  }
  return g;
}

inline double rel_error(const Point& a, const Point& b) {
  return (a - b).norm() / std::max(b.norm(), 1e-3);
}

}  // namespace testing
