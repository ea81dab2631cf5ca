#include "smoothcvx/core/mirror.hpp"

#include <cmath>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {
namespace {

void require_positive(const Point& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!(x[i] > 0.0))
      throw DomainError("entropy map needs positive coordinates; x[" + std::to_string(i) +
                        "] = " + std::to_string(x[i]));
}

}  // namespace

double MirrorMap::phi(const Point& x) const {
  if (kind_ == MirrorKind::euclidean) return 0.5 * x.squaredNorm();
  require_positive(x);
  return (x.array() * x.array().log()).sum();
}

Point MirrorMap::grad(const Point& x) const {
  if (kind_ == MirrorKind::euclidean) return x;
  require_positive(x);
  return (1.0 + x.array().log()).matrix();
}

Point MirrorMap::grad_inv(const Point& theta) const {
  if (kind_ == MirrorKind::euclidean) return theta;
  return (theta.array() - 1.0).exp().max(kEntropyFloor).matrix();
}

double MirrorMap::bregman(const Point& x, const Point& y) const {
  if (x.size() != y.size()) throw InputError("bregman: dimension mismatch");
  if (kind_ == MirrorKind::euclidean) return 0.5 * (x - y).squaredNorm();
  require_positive(x);
  require_positive(y);
  // generalized KL; equals KL(x||y) when both sum to one
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += x[i] * std::log(x[i] / y[i]) - x[i] + y[i];
  return std::max(0.0, s);
}

double MirrorMap::norm(const Point& x) const {
  return kind_ == MirrorKind::euclidean ? x.norm() : x.lpNorm<1>();
}

double MirrorMap::dual_norm(const Point& x) const {
  return kind_ == MirrorKind::euclidean ? x.norm() : x.lpNorm<Eigen::Infinity>();
}

}  // namespace smoothcvx
