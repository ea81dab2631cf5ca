#pragma once

#include <cstddef>
#include <limits>

#include "smoothcvx/adversary/sequence.hpp"
#include "smoothcvx/core/rng.hpp"

namespace smoothcvx {

// <f, x> for rounds 1..floor(T/2), then <g, x>; an odd T gives the second half the extra round.
LossSequence switching_linear(const Point& f, const Point& g, std::size_t T);

// The same loss every round.
LossSequence constant_sequence(const RoundLoss& loss, std::size_t T);

// One-dimensional adversary against FTRL with step eta, keyed on s = floor(1/eta):
//   s >= sqrt(T): f for floor(s/2) rounds, then zero losses;
//   1 <= s < sqrt(T): blocks of s rounds of f then s rounds of -f;
//   s = 0: -f, then f and -f alternating.
// f(x) = x. gv_budget caps the number of sign flips in the middle case so that the
// gradual variation (4 per flip) stays within the budget; later rounds are zero.
LossSequence ftrl_adversary(double eta, std::size_t T,
                            double gv_budget = std::numeric_limits<double>::infinity());

// f_t(x) = 0.5 ||x - c_t||^2 with c_t = radius (cos(speed t), sin(speed t), 0, ...).
LossSequence drifting_quadratics(double speed, std::size_t T, std::size_t d, double radius = 0.5);

// Unit vectors y_t x_t on a random walk over the sphere: each step rotates towards a random
// orthogonal direction so that ||y_{t+1} x_{t+1} - y_t x_t|| = drift exactly (drift <= 2).
// The walk is drawn once, so the sequence is pure. Hinge losses.
LossSequence classification_stream(double drift, std::size_t T, std::size_t d, Rng& rng);

// Expert losses in {0, 1}: expert 0 is perfect until round switch_at, expert 1 afterwards,
// the others always lose 1.
LossSequence expert_switch(std::size_t experts, std::size_t T, std::size_t switch_at);

// a e_1, -a e_1, a e_1, ... for an even number K of rounds, then zero losses. With f_0 = 0
// the gradual variation is a^2 (4K - 2); K = max(2, 2 round((egv + 2) / 8)) and a is chosen
// so that it equals `egv` exactly.
LossSequence linear_with_variation(double egv, std::size_t T, std::size_t d);

}  // namespace smoothcvx
