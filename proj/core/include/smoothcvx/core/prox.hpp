#pragma once

#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/core/mirror.hpp"
#include "smoothcvx/core/types.hpp"

namespace smoothcvx {

// argmin_{u in domain} eta <u, g> + B_Phi(u, z).
// Entropy map supports simplex, box with lo >= 0, l1 ball (positive orthant),
// ball and halfspace; the last two use a bisection on the multiplier.
Point prox_step(const MirrorMap& map, const Domain& domain, const Point& z, const Point& g,
                double eta);

// argmin_{||u - c|| <= r} <g, u> + 0.5 (u - z)^T H (u - z), H symmetric positive definite.
// Empty center means the origin.
Point mahalanobis_ball_prox(const Matrix& H, const Point& z, const Point& g, double r,
                            const Point& center = Point());

// Coordinatewise sign(g_i) * min(gamma, |g_i|).
Point clip_component(double gamma, const Point& g);

// Prox of t * ||.||_1.
Point soft_threshold(const Point& z, double t);

}  // namespace smoothcvx
