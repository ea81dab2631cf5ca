#pragma once

#include <vector>

namespace smoothcvx {

// Least-squares slope of log y against log x. Needs at least two positive pairs.
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

// Least-squares slope of y against x.
double linear_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace smoothcvx
