#include "smoothcvx/problems/smoothed_hinge.hpp"

#include <cmath>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {
namespace {

double softplus(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

void check_gamma(double gamma) {
  if (!(gamma > 0.0)) throw ConfigError("smoothing parameter gamma must be positive");
}

}  // namespace

double smoothed_hinge_value(double z, double gamma) {
  check_gamma(gamma);
  return softplus(gamma * (1.0 - z)) / gamma;
}

double smoothed_hinge_derivative(double z, double gamma) {
  check_gamma(gamma);
  return -sigmoid(gamma * (1.0 - z));
}

double smoothed_hinge_second(double z, double gamma) {
  check_gamma(gamma);
  const double s = sigmoid(gamma * (1.0 - z));
  return gamma * s * (1.0 - s);
}

double psi_transform(double eta, double gamma) {
  check_gamma(gamma);
  const double a = std::abs(eta);
  if (!(a < 1.0)) throw DomainError("psi_transform needs |eta| < 1");
  // With s = e^{-gamma} sqrt(eta^2 e^{2 gamma} + 1 - eta^2) the two constants become
  // C1 = e^gamma (s - a) and C2 = e^gamma (s + a); the logs below are the two bracketed terms.
  const double s = std::sqrt(a * a + (1.0 - a * a) * std::exp(-2.0 * gamma));
  const double l0 = softplus(gamma);
  const double a1 = std::log1p((1.0 - a) / (a + s));
  const double a2 = softplus(2.0 * gamma + std::log(a + s) - std::log1p(-a));
  const double psi = (1.0 + a) / (2.0 * gamma) * (l0 - a1) + (1.0 - a) / (2.0 * gamma) * (l0 - a2);
  return std::max(0.0, psi);
}

double psi_lower_bound(double eta, double gamma) {
  check_gamma(gamma);
  const double a = std::abs(eta);
  if (a == 0.0) return -INFINITY;
  return a - std::log(1.0 / a) / gamma;
}

double binary_excess_risk_bound(double e_phi, double gamma) {
  check_gamma(gamma);
  if (!(e_phi > 0.0)) throw DomainError("excess risk must be positive");
  return e_phi + e_phi / (1.0 + gamma * e_phi) * std::log(1.0 / e_phi);
}

SmoothedHinge::SmoothedHinge(double g) : gamma(g) { check_gamma(g); }

}  // namespace smoothcvx
