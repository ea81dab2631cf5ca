#pragma once

#include "smoothcvx/core/objective.hpp"

namespace smoothcvx {

struct GradientVariance {
  double sgd_var = 0.0;    // E||grad f_i(w) - grad F(w)||^2
  double mixed_var = 0.0;  // E||grad F(c) + grad f_i(w) - grad f_i(c) - grad F(w)||^2
};

// Exact over all n components.
GradientVariance gradient_variance_probe(const FiniteSum& problem, const Point& w,
                                         const Point& center);

}  // namespace smoothcvx
