#pragma once

#include <cstdint>
#include <optional>

#include "smoothcvx/core/schedule.hpp"
#include "smoothcvx/core/types.hpp"

namespace smoothcvx {

// Zero means "derive from the theorem settings" for every field below.
struct ClippedParams {
  double epsilon = 0.5;      // domain contraction factor in (0, 1)
  double tau = 0.5;          // target-risk weight in (0, 1)
  double xi = 0.0;           // clip multiplier, auto 4 beta / (alpha tau)
  double target_risk = 0.0;  // l_phi, required
  double eps_prior = 0.0;    // defaults to target_risk
  double delta = 0.1;        // failure probability in the T1 formula
  std::uint64_t T1 = 0;
  std::uint64_t m = 0;
  double eta = 0.0;
};

struct MixedGradParams {
  double gamma = 2.0;  // shrink factor, must exceed 1
  double lambda1 = 0.0;
  double Delta1 = 0.0;
  std::uint64_t T1 = 0;
  std::uint64_t m = 0;  // required
  double eta1 = 0.0;
  double delta = 0.011108996538242306;  // e^{-9/2}
};

struct EmgdParams {
  double Delta1 = 0.0;
  std::uint64_t T = 0;
  std::uint64_t T_cap = 0;  // 0 means no cap
  std::uint64_t m = 0;      // required
  double eta = 0.0;
  double delta = 0.1;
  bool probe_variance = false;  // record exact gradient variances (finite sums only)
};

struct PrimalDualParams {
  double gamma = 0.0;
  double eta = 0.0;
  double delta = 0.1;
  double G1 = 0.0;     // bound on ||grad f|| over the unit ball
  double sigma = 0.0;  // stochastic-gradient noise level
};

struct SmoothingParams {
  double gamma = 0.0;    // auto ln T / T
  double lambda0 = 0.0;  // auto 2 G1 / rho
  double beta = 0.0;     // strong convexity of f, auto from the problem
  double G1 = 0.0;       // bound on stochastic gradients
};

struct SolverConfig {
  std::uint64_t seed = 1;
  std::uint64_t T = 1000;  // stochastic-oracle budget, or iterations for full-gradient methods
  std::optional<StepSchedule> schedule;  // unset means the method's default
  Point w0;                              // empty means the origin
  std::uint64_t record_every = 0;        // 0 means about 100 records
  bool record_iterates = false;
  std::optional<double> f_star;  // reference optimum for the suboptimality column

  ClippedParams clipped;
  MixedGradParams mixed;
  EmgdParams emgd;
  PrimalDualParams pd;
  SmoothingParams st;
};

}  // namespace smoothcvx
