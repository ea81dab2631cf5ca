#include <cmath>

#include "common.hpp"
#include "smoothcvx/core/rng.hpp"
#include "smoothcvx/stochastic/solvers.hpp"

namespace smoothcvx {

Trace mixed_grad(const Objective& problem, const Domain& ball, const SolverConfig& cfg) {
  if (ball.kind() != DomainKind::ball) throw UnsupportedError("mixed_grad needs a ball domain");
  const MixedGradParams& p = cfg.mixed;
  if (!(p.gamma > 1.0)) throw ConfigError("MixedGrad shrink factor gamma must exceed 1");
  if (p.m == 0) throw ConfigError("MixedGrad needs the number of epochs m");
  const double beta = problem.sample_smoothness();
  const double R = ball.radius_param();
  const Point c = ball.center().size() ? ball.center() : Point::Zero(problem.dim());

  std::uint64_t T1 = p.T1 ? p.T1
                          : static_cast<std::uint64_t>(std::ceil(
                                300.0 * std::log(static_cast<double>(p.m) / p.delta)));
  const double g2 = p.gamma * p.gamma;
  Trace trace;
  trace.seed = cfg.seed;
  const double total = static_cast<double>(T1) * (std::pow(g2, static_cast<double>(p.m)) - 1.0) / (g2 - 1.0);
  if (cfg.T > 0 && total > static_cast<double>(cfg.T)) {
    const auto scaled = static_cast<std::uint64_t>(std::floor(static_cast<double>(T1) * cfg.T / total));
    trace.note("deviation", "first epoch scaled from " + std::to_string(T1) + " to fit budget");
    T1 = std::max<std::uint64_t>(1, scaled);
  }
  double lambda = p.lambda1 > 0 ? p.lambda1 : 16.0 * beta;
  double eta = p.eta1 > 0 ? p.eta1 : 1.0 / (2.0 * beta * std::sqrt(3.0 * static_cast<double>(T1)));
  double Delta = p.Delta1 > 0 ? p.Delta1 : R + c.norm();
  trace.note("T1", static_cast<double>(T1));
  trace.note("lambda1", lambda);
  trace.note("eta1", eta);
  trace.note("Delta1", Delta);

  OracleSet oracle(problem);
  Rng rng(cfg.seed);
  detail::Recorder rec(problem, cfg, p.m);
  Point w_bar = ball.project(detail::start_point(problem, cfg));
  rec.add(trace, 0, w_bar, w_bar, oracle);
  double Tk = static_cast<double>(T1);
  for (std::uint64_t k = 1; k <= p.m; ++k) {
    const auto steps = static_cast<std::uint64_t>(std::llround(Tk));
    const Point g_k = lambda * w_bar + oracle.full_gradient(w_bar);
    Point w = Point::Zero(w_bar.size());
    Point sum = Point::Zero(w_bar.size());
    // W_k = {w : ||w + w_bar - c|| <= R, ||w|| <= Delta}
    const Point shifted_center = c - w_bar;
    const Point origin = Point::Zero(w_bar.size());
    for (std::uint64_t t = 1; t <= steps; ++t) {
      sum += w;
      const Component f = oracle.component(rng);
      const Point g_hat = g_k + (f.gradient(w + w_bar) - f.gradient(w_bar));
      w = project_two_balls(w - eta * (g_hat + lambda * w), shifted_center, R, origin, Delta);
      oracle.count_projection();
    }
    sum += w;
    w_bar += sum / static_cast<double>(steps + 1);
    if (rec.due(k)) rec.add(trace, k, w_bar, w_bar, oracle);
    Delta /= p.gamma;
    lambda /= p.gamma;
    eta /= p.gamma;
    Tk *= g2;
  }
  detail::finish(trace, w_bar, oracle);
  return trace;
}

}  // namespace smoothcvx
