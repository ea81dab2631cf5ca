#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "smoothcvx/core/objective.hpp"
#include "smoothcvx/core/rng.hpp"

namespace smoothcvx {

struct ProblemConstants {
  double L = 0.0;       // smoothness of F
  double lambda = 0.0;  // strong convexity of F
  double G = 0.0;       // largest sampled stochastic-gradient norm
  double sigma = 0.0;   // sqrt of the sampled gradient variance
  double kappa = 0.0;   // L / lambda, infinite when lambda = 0
  std::string warning;  // non-empty when power iteration did not converge
};

struct EigenEstimate {
  double value = 0.0;
  int steps = 0;
  bool converged = false;
};

// Largest eigenvalue of a symmetric PSD operator by power iteration from a seeded start.
EigenEstimate power_iteration(const std::function<Point(const Point&)>& apply, std::size_t dim,
                              int max_steps, double rel_tol = 1e-12, std::uint64_t seed = 0);

// L from the problem's curvature operator (power iteration, up to 1e4 steps),
// sigma and G from `samples` stochastic gradients at w = 0.
ProblemConstants estimate_constants(const Objective& problem, std::size_t samples = 10000,
                                    std::uint64_t seed = 0);

}  // namespace smoothcvx
