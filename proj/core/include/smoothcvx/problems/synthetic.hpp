#pragma once

#include <cstddef>

#include "smoothcvx/core/rng.hpp"
#include "smoothcvx/core/types.hpp"
#include "smoothcvx/problems/dataset.hpp"

namespace smoothcvx {

// Gaussian features scaled to ||x|| ~ 1, labels from a logistic model around a random w.
LabeledDataset make_classification_data(std::size_t n, std::size_t d, Rng& rng,
                                        double margin_scale = 4.0);

// X = Z diag(sqrt(spectrum)) with Gaussian Z; y = X w_true + noise * N(0, 1).
// spectrum[j] is the expected variance of feature j.
LabeledDataset make_regression_data(std::size_t n, const Point& spectrum, double noise, Rng& rng);

// Rows x_i = B^T z_i with a fixed Gaussian rank x d matrix B, scaled to unit norm;
// y = <x, w_true> + noise * N(0, 1). The design spans only `rank` directions.
LabeledDataset make_low_rank_regression_data(std::size_t n, std::size_t d, std::size_t rank, double noise,
                                             Rng& rng);

// Geometric spectrum from `top` down to `bottom` over d coordinates.
Point geometric_spectrum(std::size_t d, double top, double bottom);

// Random orthogonal matrix (QR of a Gaussian matrix, sign-fixed).
Matrix random_orthogonal(std::size_t d, Rng& rng);

// Q diag(eigs) Q^T with random Q.
Matrix random_psd(const Point& eigs, Rng& rng);

}  // namespace smoothcvx
