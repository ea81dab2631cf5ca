#include <cmath>

#include "common.hpp"
#include "smoothcvx/core/rng.hpp"
#include "smoothcvx/stochastic/solvers.hpp"
#include "smoothcvx/stochastic/variance.hpp"

namespace smoothcvx {
namespace {

Point project_shrunk(const Domain& domain, const Point& center, double Delta, const Point& x) {
  if (domain.kind() == DomainKind::ball) {
    const Point c = domain.center().size() ? domain.center() : Point::Zero(x.size());
    return project_two_balls(x, c, domain.radius_param(), center, Delta);
  }
  return dykstra_project(Domain::ball(Delta, center), domain, x, 100, 1e-10);
}

}  // namespace

Trace emgd(const Objective& problem, const Domain& domain, const SolverConfig& cfg) {
  const EmgdParams& p = cfg.emgd;
  const double lambda = problem.strong_convexity();
  if (!(lambda > 0.0)) throw ConfigError("emgd needs lambda > 0; use mixed_grad instead");
  if (p.m == 0) throw ConfigError("emgd needs the number of epochs m");
  const double L = problem.sample_smoothness();

  Trace trace;
  trace.seed = cfg.seed;
  std::uint64_t T = p.T;
  if (T == 0) {
    const double kappa = L / lambda;
    T = static_cast<std::uint64_t>(std::ceil(1152.0 * kappa * kappa * std::log(1.0 / p.delta)));
    trace.note("T_prescribed", static_cast<double>(T));
  }
  if (p.T_cap && T > p.T_cap) {
    trace.note("deviation", "epoch length capped from " + std::to_string(T));
    T = p.T_cap;
  }
  if (cfg.T > 0 && p.m * T > cfg.T) {
    trace.note("deviation", "epoch length scaled from " + std::to_string(T) + " to fit budget");
    T = std::max<std::uint64_t>(1, cfg.T / p.m);
  }
  const double eta = p.eta > 0 ? p.eta : 1.0 / (L * std::sqrt(static_cast<double>(T)));
  const Point w0 = domain.project(detail::start_point(problem, cfg));
  double Delta = p.Delta1;
  if (!(Delta > 0.0)) throw ConfigError("emgd needs the initial domain size Delta1");
  trace.note("T", static_cast<double>(T));
  trace.note("eta", eta);
  trace.note("Delta1", Delta);

  const auto* finite = dynamic_cast<const FiniteSum*>(&problem);
  if (p.probe_variance && !finite) throw UnsupportedError("variance probes need a finite sum");

  OracleSet oracle(problem);
  Rng rng(cfg.seed);
  detail::Recorder rec(problem, cfg, p.m);
  Point w_bar = w0;
  {
    auto& r = rec.add(trace, 0, w_bar, w_bar, oracle);
    r.radius = Delta;
    if (p.probe_variance) {
      const auto v = gradient_variance_probe(*finite, w_bar, w_bar);
      r.variance_sgd = v.sgd_var;
      r.variance_mixed = v.mixed_var;
    }
  }
  for (std::uint64_t k = 1; k <= p.m; ++k) {
    const Point full = oracle.full_gradient(w_bar);
    Point w = w_bar;
    Point sum = w;
    for (std::uint64_t t = 1; t <= T; ++t) {
      const Component f = oracle.component(rng);
      const Point g = full + (f.gradient(w) - f.gradient(w_bar));
      w = project_shrunk(domain, w_bar, Delta, w - eta * g);
      oracle.count_projection();
      sum += w;
    }
    const Point next = sum / static_cast<double>(T + 1);
    Delta /= std::sqrt(2.0);
    auto& r = rec.add(trace, k, next, next, oracle);
    r.radius = Delta;
    if (p.probe_variance) {
      // variance of the mixed gradient anchored at this epoch's center, at the epoch's output
      const auto v = gradient_variance_probe(*finite, next, w_bar);
      r.variance_sgd = v.sgd_var;
      r.variance_mixed = v.mixed_var;
    }
    w_bar = next;
  }
  detail::finish(trace, w_bar, oracle);
  return trace;
}

}  // namespace smoothcvx
