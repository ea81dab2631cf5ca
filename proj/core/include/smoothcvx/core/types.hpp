#pragma once

#include <Eigen/Dense>

namespace smoothcvx {

using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline bool all_finite(const Point& x) { return x.allFinite(); }

}  // namespace smoothcvx
