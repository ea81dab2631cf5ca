#pragma once

#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/core/mirror.hpp"
#include "smoothcvx/core/objective.hpp"
#include "smoothcvx/core/trace.hpp"
#include "smoothcvx/stochastic/config.hpp"

namespace smoothcvx {

// Projected SGD; returns the uniform average of w_1..w_T. Default step 1/sqrt(t).
Trace sgd(const Objective& problem, const Domain& domain, const SolverConfig& cfg);

// Projected gradient descent, last iterate. Default step 1/L.
Trace gd(const Objective& problem, const Domain& domain, const SolverConfig& cfg);

// Accelerated projected gradient (theta_k = 2/(k+2)), returns the h sequence.
Trace agd(const Objective& problem, const Domain& domain, const SolverConfig& cfg);

// Conditional gradient with eta_t = 2/(t+1).
Trace cgd(const Objective& problem, const Domain& domain, const SolverConfig& cfg);

// Stochastic mirror descent with averaged output. Default step 1/sqrt(t).
Trace mirror_descent(const Objective& problem, const Domain& domain, const MirrorMap& map,
                     const SolverConfig& cfg);

// Staged SGD with clipped gradients and target-risk domain shrinking. Domain must be a ball.
Trace clipped_sgd(const Objective& problem, const Domain& ball, const SolverConfig& cfg);

// Epochs of regularized SGD driven by one full gradient each, geometric epoch lengths.
Trace mixed_grad(const Objective& problem, const Domain& ball, const SolverConfig& cfg);

// Fixed-length epochs of mixed-gradient descent on a shrinking domain.
Trace emgd(const Objective& problem, const Domain& domain, const SolverConfig& cfg);

// SGD with one projection, primal-dual updates on the unit ball.
Trace sgd_pd(const Objective& problem, const Domain& domain, const SolverConfig& cfg);

// SGD with one projection, smoothed penalty (strongly convex f).
Trace sgd_st(const Objective& problem, const Domain& domain, const SolverConfig& cfg);

// Numerically safe e^x / (1 + e^x).
double logistic_weight(double x);

}  // namespace smoothcvx
