#pragma once

#include "smoothcvx/core/types.hpp"

namespace smoothcvx {

enum class MirrorKind { euclidean, entropy };

// Strongly convex potential Phi with gradient and inverse-gradient access.
// euclidean: Phi = 0.5 ||x||_2^2, 1-strongly convex in l2.
// entropy:   Phi = sum x_i ln x_i, 1-strongly convex in l1 on the simplex.
class MirrorMap {
 public:
  static MirrorMap euclidean() { return MirrorMap(MirrorKind::euclidean); }
  static MirrorMap entropy() { return MirrorMap(MirrorKind::entropy); }

  MirrorKind kind() const { return kind_; }
  double alpha() const { return 1.0; }

  double phi(const Point& x) const;
  Point grad(const Point& x) const;
  Point grad_inv(const Point& theta) const;
  double bregman(const Point& x, const Point& y) const;
  // Norm in which Phi is alpha-strongly convex, and its dual.
  double norm(const Point& x) const;
  double dual_norm(const Point& x) const;

 private:
  explicit MirrorMap(MirrorKind k) : kind_(k) {}
  MirrorKind kind_;
};

inline double bregman(const MirrorMap& map, const Point& x, const Point& y) {
  return map.bregman(x, y);
}

// Smallest coordinate kept by the entropy map before taking logarithms.
inline constexpr double kEntropyFloor = 1e-300;

}  // namespace smoothcvx
