#include <cmath>

#include "common.hpp"
#include "smoothcvx/core/prox.hpp"
#include "smoothcvx/core/rng.hpp"
#include "smoothcvx/stochastic/solvers.hpp"

namespace smoothcvx {

Trace clipped_sgd(const Objective& problem, const Domain& ball, const SolverConfig& cfg) {
  if (ball.kind() != DomainKind::ball) throw UnsupportedError("clipped_sgd needs a ball domain");
  const ClippedParams& p = cfg.clipped;
  if (!(p.target_risk > 0.0)) throw ConfigError("target risk l_phi must be positive");
  if (!(p.epsilon > 0.0 && p.epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
  if (!(p.tau > 0.0 && p.tau < 1.0)) throw ConfigError("tau must lie in (0, 1)");
  const double alpha = problem.strong_convexity();
  const double beta = problem.sample_smoothness();
  if (!(alpha > 0.0)) throw ConfigError("clipped_sgd needs a strongly convex expected loss");

  const auto d = static_cast<double>(problem.dim());
  const double R = ball.radius_param() + (ball.center().size() ? ball.center().norm() : 0.0);
  const double eps_prior = p.eps_prior > 0 ? p.eps_prior : p.target_risk;
  const double xi = p.xi > 0 ? p.xi : std::max(1.0, 4.0 * beta / (alpha * p.tau));
  std::uint64_t m = p.m;
  if (m == 0) {
    // smallest m with (beta R^2 / 2) eps^m <= eps_prior
    const double ratio = 2.0 * eps_prior / (beta * R * R);
    m = ratio >= 1.0 ? 1 : static_cast<std::uint64_t>(std::ceil(std::log(ratio) / std::log(p.epsilon)));
  }
  const double s = std::max(1.0, std::ceil(std::log2(xi * beta * R * R / eps_prior)));
  std::uint64_t T1 = p.T1;
  if (T1 == 0) {
    const double a = (xi * xi * xi * beta * d + 2.0 * xi * beta * std::sqrt(d)) / (p.epsilon * alpha) *
                     std::log(static_cast<double>(m) * s / p.delta);
    const double b = 16.0 * xi * xi * beta * beta / (alpha * alpha * p.epsilon * p.epsilon);
    T1 = static_cast<std::uint64_t>(std::ceil(4.0 * std::max(a, b)));
  }

  Trace trace;
  trace.seed = cfg.seed;
  if (cfg.T > 0 && m * T1 > cfg.T) {
    trace.note("deviation", "stage length scaled from " + std::to_string(T1) + " to fit budget");
    T1 = std::max<std::uint64_t>(1, cfg.T / m);
  }
  const double eta = p.eta > 0 ? p.eta : 1.0 / (2.0 * xi * beta * std::sqrt(static_cast<double>(T1)));
  trace.note("xi", xi);
  trace.note("T1", static_cast<double>(T1));
  trace.note("m", static_cast<double>(m));
  trace.note("s", s);
  trace.note("eta", eta);

  OracleSet oracle(problem);
  Rng rng(cfg.seed);
  detail::Recorder rec(problem, cfg, m);
  Point w_hat = ball.project(detail::start_point(problem, cfg));
  double Delta = R;
  rec.add(trace, 0, w_hat, w_hat, oracle).radius = Delta;
  const double fixed_point = std::sqrt(p.tau * p.target_risk / (1.0 - p.epsilon));
  for (std::uint64_t k = 1; k <= m; ++k) {
    const double gamma_k = 2.0 * xi * beta * Delta;
    const Domain shell = Domain::ball(Delta, w_hat);
    Point w = w_hat;
    Point sum = Point::Zero(w.size());
    for (std::uint64_t t = 1; t <= T1; ++t) {
      sum += w;
      const Point v = clip_component(gamma_k, oracle.stochastic_gradient(w, rng));
      w = dykstra_project(shell, ball, w - eta * v, 100, 1e-10);
      oracle.count_projection();
    }
    const double next = std::sqrt(p.epsilon * Delta * Delta + p.tau * p.target_risk);
    // The recursion moves monotonically toward its fixed point.
    if ((Delta >= fixed_point && (next > Delta || next < fixed_point - 1e-12)) ||
        (Delta < fixed_point && (next < Delta || next > fixed_point + 1e-12)))
      throw NumericError("domain-size recursion left its monotone path");
    Delta = next;
    w_hat = sum / static_cast<double>(T1);
    if (rec.due(k)) rec.add(trace, k, w_hat, w_hat, oracle).radius = Delta;
  }
  detail::finish(trace, w_hat, oracle);
  return trace;
}

}  // namespace smoothcvx
