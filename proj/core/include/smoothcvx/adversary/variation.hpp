#pragma once

#include <vector>

#include "smoothcvx/adversary/sequence.hpp"

namespace smoothcvx {

enum class VariationNorm { l2, linf };

// sum_{t=0}^{T-1} ||grad f_{t+1}(y_t) - grad f_t(y_t)||^2 with f_0 = 0, at the visited points
// y_0..y_{T-1}.
double egv_at_points(const LossSequence& seq, const std::vector<Point>& points,
                     VariationNorm norm = VariationNorm::l2);

// sum_{t=0}^{T-1} max_x ||grad f_{t+1}(x) - grad f_t(x)||^2 with f_0 = 0. Closed form for linear
// sequences and for quadratics of one common curvature; hinge sequences use the variation of
// the examples y_t x_t. Anything else is unsupported.
double egv_sup(const LossSequence& seq, VariationNorm norm = VariationNorm::l2);

// sum_t ||f_t - mu||^2 for linear sequences, mu the mean loss vector.
double total_variation(const LossSequence& seq);

}  // namespace smoothcvx
