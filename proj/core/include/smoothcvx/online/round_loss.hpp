#pragma once

#include <cstddef>
#include <functional>
#include <memory>

#include "smoothcvx/core/types.hpp"

namespace smoothcvx {

enum class LossKind { linear, quadratic, hinge, max_structure, custom };

// Dual set Q of a max structure.
enum class DualSet { unit_box, simplex };

// f(x) = fhat(x) + max_{u in Q} <A x, u> - <c, u>.
// fhat may be left empty (zero). The dual smooth part is linear, so its gradient is c.
struct MaxParts {
  Matrix A;
  Point c;
  DualSet dual = DualSet::unit_box;
  std::function<double(const Point&)> fhat_value;
  std::function<Point(const Point&)> fhat_gradient;
  double fhat_smoothness = 0.0;
};

// One round's loss f_t with value and (sub)gradient access. Cheap to copy.
class RoundLoss {
 public:
  using ValueFn = std::function<double(const Point&)>;
  using GradientFn = std::function<Point(const Point&)>;

  // <f, x>
  static RoundLoss linear(Point f);
  static RoundLoss zero(std::size_t dim) { return linear(Point::Zero(static_cast<Eigen::Index>(dim))); }
  // 0.5 s ||x - c||^2
  static RoundLoss quadratic(Point center, double curvature = 1.0);
  // max(0, 1 - <x, yx>); carries the max structure A = -yx^T, c = -1, Q = [0, 1].
  static RoundLoss hinge(Point yx);
  static RoundLoss with_max_structure(MaxParts parts);
  static RoundLoss custom(std::size_t dim, ValueFn value, GradientFn gradient, double smoothness);

  LossKind kind() const { return kind_; }
  std::size_t dim() const { return static_cast<std::size_t>(vec_.size() ? vec_.size() : dim_); }
  double value(const Point& x) const;
  Point gradient(const Point& x) const;
  // Lipschitz constant of the gradient (0 for linear, inf for hinge).
  double smoothness() const;

  // linear: f; quadratic: center; hinge: y x.
  const Point& vector() const { return vec_; }
  double curvature() const { return scale_; }
  // Present for hinge and max-structure losses.
  const MaxParts* max_parts() const { return parts_.get(); }

 private:
  RoundLoss() = default;
  void check_dim(const Point& x) const;

  LossKind kind_ = LossKind::linear;
  Point vec_;
  double scale_ = 1.0;
  std::size_t dim_ = 0;
  std::shared_ptr<const MaxParts> parts_;
  ValueFn value_;
  GradientFn gradient_;
};

}  // namespace smoothcvx
