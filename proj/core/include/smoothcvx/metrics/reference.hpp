#pragma once

#include <cstdint>
#include <optional>

#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/core/objective.hpp"

namespace smoothcvx {

struct ReferenceOptimum {
  Point w;
  double value = 0.0;
  double certificate = 0.0;  // norm of the gradient mapping L (w - P(w - grad/L)) at w
  std::uint64_t iterations = 0;
};

// Accelerated projected gradient with step 1/L and gradient-based restarts. Stops when the
// certificate drops below tol or after max_iters steps.
ReferenceOptimum reference_optimum(const Objective& problem, const std::optional<Domain>& domain = std::nullopt,
                                   std::uint64_t max_iters = 100000, double tol = 1e-11);

}  // namespace smoothcvx
