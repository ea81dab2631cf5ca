#pragma once

#include <cstddef>
#include <cstdint>

#include "smoothcvx/core/rng.hpp"
#include "smoothcvx/core/types.hpp"

namespace smoothcvx {

// Expected loss F(w) = E f(w; xi) with a stochastic oracle.
// A draw returns a 64-bit token identifying the random function f(.; xi), so the same
// sample can be evaluated at several points (needed by mixed gradients).
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::size_t dim() const = 0;
  virtual double value(const Point& w) const = 0;
  virtual Point gradient(const Point& w) const = 0;
  virtual double smoothness() const = 0;
  virtual double strong_convexity() const { return 0.0; }

  // Default: deterministic objective, every sample equals F.
  virtual std::uint64_t draw(Rng& rng) const {
    (void)rng;
    return 0;
  }
  virtual double sample_value(std::uint64_t token, const Point& w) const {
    (void)token;
    return value(w);
  }
  virtual Point sample_gradient(std::uint64_t token, const Point& w) const {
    (void)token;
    return gradient(w);
  }
  // Smoothness of a single sample f(.; xi); defaults to that of F.
  virtual double sample_smoothness() const { return smoothness(); }
};

// F(w) = (1/n) sum_i f_i(w). Tokens are component indices drawn uniformly.
class FiniteSum : public Objective {
 public:
  virtual std::size_t size() const = 0;
  virtual double component_value(std::size_t i, const Point& w) const = 0;
  virtual Point component_gradient(std::size_t i, const Point& w) const = 0;

  double value(const Point& w) const override;
  Point gradient(const Point& w) const override;

  std::uint64_t draw(Rng& rng) const override { return rng.index(size()); }
  double sample_value(std::uint64_t token, const Point& w) const override {
    return component_value(static_cast<std::size_t>(token), w);
  }
  Point sample_gradient(std::uint64_t token, const Point& w) const override {
    return component_gradient(static_cast<std::size_t>(token), w);
  }
};

// 0.5 (w - c)^T A (w - c) with exact gradients; A symmetric positive semidefinite.
class Quadratic : public Objective {
 public:
  Quadratic(Matrix A, Point center);
  std::size_t dim() const override { return static_cast<std::size_t>(c_.size()); }
  double value(const Point& w) const override;
  Point gradient(const Point& w) const override;
  double smoothness() const override { return L_; }
  double strong_convexity() const override { return mu_; }
  const Matrix& hessian() const { return A_; }
  const Point& center() const { return c_; }

 private:
  Matrix A_;
  Point c_;
  double L_ = 0.0, mu_ = 0.0;
};

}  // namespace smoothcvx
