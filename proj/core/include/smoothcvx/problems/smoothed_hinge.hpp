#pragma once

namespace smoothcvx {

// phi(z; gamma) = (1/gamma) log(1 + exp(gamma (1 - z)))
double smoothed_hinge_value(double z, double gamma);
double smoothed_hinge_derivative(double z, double gamma);
double smoothed_hinge_second(double z, double gamma);

// psi(eta; gamma) = phi(0) - min_a [ (1+eta)/2 phi(a) + (1-eta)/2 phi(-a) ], in closed form.
// Evaluated in log space; throws DomainError for |eta| >= 1.
double psi_transform(double eta, double gamma);

// |eta| - (1/gamma) log(1/|eta|)
double psi_lower_bound(double eta, double gamma);

// Bound on binary excess risk E(h) given smooth excess risk e = E_phi(h) in (0, 1]:
// e + e / (1 + gamma e) * log(1/e).
double binary_excess_risk_bound(double e_phi, double gamma);

struct SmoothedHinge {
  double gamma;
  explicit SmoothedHinge(double g);
  double operator()(double z) const { return smoothed_hinge_value(z, gamma); }
  double derivative(double z) const { return smoothed_hinge_derivative(z, gamma); }
  double second(double z) const { return smoothed_hinge_second(z, gamma); }
};

}  // namespace smoothcvx
