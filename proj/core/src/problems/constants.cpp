#include "smoothcvx/problems/constants.hpp"

#include <cmath>
#include <limits>

#include "smoothcvx/core/errors.hpp"
#include "smoothcvx/problems/linear_models.hpp"

namespace smoothcvx {

EigenEstimate power_iteration(const std::function<Point(const Point&)>& apply, std::size_t dim,
                              int max_steps, double rel_tol, std::uint64_t seed) {
  Rng rng(seed, 0x9e37);
  Point v(static_cast<Eigen::Index>(dim));
  for (auto& x : v) x = rng.normal();
  v.normalize();
  EigenEstimate est;
  double prev = 0.0;
  for (int k = 1; k <= max_steps; ++k) {
    Point Av = apply(v);
    const double lam = v.dot(Av);
    const double n = Av.norm();
    est.value = lam;
    est.steps = k;
    if (n == 0.0) {
      est.converged = true;
      break;
    }
    v = Av / n;
    if (k > 1 && std::abs(lam - prev) <= rel_tol * std::max(std::abs(lam), 1e-300)) {
      est.converged = true;
      break;
    }
    prev = lam;
  }
  return est;
}

ProblemConstants estimate_constants(const Objective& problem, std::size_t samples,
                                    std::uint64_t seed) {
  ProblemConstants c;
  c.lambda = problem.strong_convexity();
  const std::size_t d = problem.dim();
  if (const auto* lm = dynamic_cast<const LinearModel*>(&problem)) {
    const auto e = power_iteration([lm](const Point& v) { return lm->apply_gram(v); }, d, 10000,
                                   1e-12, seed);
    c.L = e.value + lm->lambda();
    if (!e.converged) c.warning = "power iteration did not converge in 10000 steps";
  } else if (const auto* q = dynamic_cast<const Quadratic*>(&problem)) {
    const auto e = power_iteration([q](const Point& v) { return Point(q->hessian() * v); }, d,
                                   10000, 1e-12, seed);
    c.L = e.value;
    if (!e.converged) c.warning = "power iteration did not converge in 10000 steps";
  } else {
    c.L = problem.smoothness();
  }
  c.kappa = c.lambda > 0 ? c.L / c.lambda : std::numeric_limits<double>::infinity();

  if (samples > 0) {
    Rng rng(seed, 0x5a17);
    const Point w = Point::Zero(static_cast<Eigen::Index>(d));
    Point mean = Point::Zero(w.size());
    double sq = 0.0, gmax = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
      const Point g = problem.sample_gradient(problem.draw(rng), w);
      mean += g;
      sq += g.squaredNorm();
      gmax = std::max(gmax, g.norm());
    }
    mean /= static_cast<double>(samples);
    const double var = std::max(0.0, sq / static_cast<double>(samples) - mean.squaredNorm());
    c.sigma = std::sqrt(var);
    c.G = gmax;
  }
  return c;
}

}  // namespace smoothcvx
