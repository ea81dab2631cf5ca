#pragma once

#include "smoothcvx/core/objective.hpp"

namespace smoothcvx {

// f(w; xi) = 0.5 (w - c)^T A (w - c) + <xi, w>, xi uniform on {-s/sqrt(d), s/sqrt(d)}^d.
// The noise has mean zero and ||xi|| = s exactly, so stochastic gradients are bounded.
class NoisyQuadratic final : public Objective {
 public:
  NoisyQuadratic(Matrix A, Point center, double noise);

  std::size_t dim() const override { return base_.dim(); }
  double value(const Point& w) const override { return base_.value(w); }
  Point gradient(const Point& w) const override { return base_.gradient(w); }
  double smoothness() const override { return base_.smoothness(); }
  double strong_convexity() const override { return base_.strong_convexity(); }

  std::uint64_t draw(Rng& rng) const override { return rng.next_u64(); }
  double sample_value(std::uint64_t token, const Point& w) const override;
  Point sample_gradient(std::uint64_t token, const Point& w) const override;

  const Quadratic& base() const { return base_; }
  double noise() const { return noise_; }
  Point noise_vector(std::uint64_t token) const;

 private:
  Quadratic base_;
  double noise_;
};

}  // namespace smoothcvx
