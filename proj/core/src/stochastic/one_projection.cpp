#include <cmath>

#include "common.hpp"
#include "smoothcvx/core/rng.hpp"
#include "smoothcvx/stochastic/solvers.hpp"

namespace smoothcvx {
namespace {

// Largest gradient norm of F over 1000 seeded points of the unit ball.
double sampled_gradient_bound(const Objective& problem, std::uint64_t seed) {
  Rng rng(seed, 0xb0);
  const auto d = static_cast<Eigen::Index>(problem.dim());
  double best = problem.gradient(Point::Zero(d)).norm();
  for (int i = 0; i < 1000; ++i) {
    Point x(d);
    for (auto& v : x) v = rng.normal();
    x *= std::pow(rng.uniform(), 1.0 / static_cast<double>(d)) / x.norm();
    best = std::max(best, problem.gradient(x).norm());
  }
  return best;
}

// Largest stochastic-gradient norm seen over 1000 samples at seeded unit-ball points.
double sampled_stochastic_bound(const Objective& problem, std::uint64_t seed) {
  Rng rng(seed, 0xb1);
  const auto d = static_cast<Eigen::Index>(problem.dim());
  double best = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Point x(d);
    for (auto& v : x) v = rng.normal();
    x *= std::pow(rng.uniform(), 1.0 / static_cast<double>(d)) / x.norm();
    best = std::max(best, problem.sample_gradient(problem.draw(rng), x).norm());
  }
  return best;
}

double sampled_noise(const Objective& problem, std::uint64_t seed) {
  Rng rng(seed, 0xb2);
  const Point x = Point::Zero(static_cast<Eigen::Index>(problem.dim()));
  const Point mean = problem.gradient(x);
  double s = 0.0;
  for (int i = 0; i < 1000; ++i) s += (problem.sample_gradient(problem.draw(rng), x) - mean).squaredNorm();
  return std::sqrt(s / 1000.0);
}

Point unit_ball_renormalize(const Point& x) { return x / std::max(x.norm(), 1.0); }

}  // namespace

double logistic_weight(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Trace sgd_pd(const Objective& problem, const Domain& domain, const SolverConfig& cfg) {
  const auto d = problem.dim();
  const DomainConstants dc = domain.constants(d, 1.0);
  if (!(dc.rho > 0.0)) throw ConfigError("constraint gradient lower bound rho must be positive");
  const PrimalDualParams& p = cfg.pd;
  const double G1 = p.G1 > 0 ? p.G1 : sampled_gradient_bound(problem, cfg.seed);
  const double sigma = p.sigma > 0 ? p.sigma : sampled_noise(problem, cfg.seed);
  const double T = static_cast<double>(cfg.T);
  const double gamma =
      p.gamma > 0 ? p.gamma
                  : dc.G2 * dc.G2 /
                        std::sqrt((G1 * G1 + dc.C2 * dc.C2 + (1.0 + std::log(2.0 / p.delta)) * sigma * sigma) * T);
  const double eta = p.eta > 0 ? p.eta : gamma / (2.0 * dc.G2 * dc.G2);

  Trace trace;
  trace.seed = cfg.seed;
  trace.note("gamma", gamma);
  trace.note("eta", eta);
  trace.note("G1", G1);
  trace.note("G2", dc.G2);
  trace.note("C2", dc.C2);
  trace.note("sigma", sigma);

  OracleSet oracle(problem);
  Rng rng(cfg.seed);
  detail::Recorder rec(problem, cfg, cfg.T);
  Point x = unit_ball_renormalize(detail::start_point(problem, cfg));
  double lambda = 0.0;
  Point sum = Point::Zero(x.size());
  {
    auto& r = rec.add(trace, 0, x, x, oracle);
    r.constraint = domain.g(x);
    r.dual = lambda;
  }
  for (std::uint64_t t = 1; t <= cfg.T; ++t) {
    sum += x;
    const double gx = domain.g(x);
    const Point step = oracle.stochastic_gradient(x, rng) + lambda * domain.grad_g(x);
    const Point x_next = unit_ball_renormalize(x - eta * step);
    lambda = std::max(0.0, (1.0 - gamma * eta) * lambda + eta * gx);
    x = x_next;
    if (rec.due(t)) {
      const Point avg = sum / static_cast<double>(t);
      auto& r = rec.add(trace, t, avg, x, oracle);
      r.constraint = domain.g(avg);
      r.dual = lambda;
    }
  }
  const Point avg = cfg.T ? Point(sum / static_cast<double>(cfg.T)) : x;
  const Point out = domain.project(avg);
  oracle.count_projection();
  detail::finish(trace, out, oracle);
  return trace;
}

Trace sgd_st(const Objective& problem, const Domain& domain, const SolverConfig& cfg) {
  const auto d = problem.dim();
  const DomainConstants dc = domain.constants(d, 1.0);
  if (!(dc.rho > 0.0)) throw ConfigError("constraint gradient lower bound rho must be positive");
  const SmoothingParams& p = cfg.st;
  const double beta = p.beta > 0 ? p.beta : problem.strong_convexity();
  if (!(beta > 0.0)) throw ConfigError("sgd_st needs a strongly convex objective");
  const double T = static_cast<double>(cfg.T);
  const double G1 = p.G1 > 0 ? p.G1 : sampled_stochastic_bound(problem, cfg.seed);
  const double gamma = p.gamma > 0 ? p.gamma : std::log(std::max(T, 2.0)) / std::max(T, 2.0);
  const double lambda0 = p.lambda0 > 0 ? p.lambda0 : 2.0 * G1 / dc.rho;

  Trace trace;
  trace.seed = cfg.seed;
  trace.note("gamma", gamma);
  trace.note("lambda0", lambda0);
  trace.note("beta", beta);
  trace.note("G1", G1);
  if (lambda0 <= G1 / dc.rho) trace.note("warning", "lambda0 <= G1/rho: theory does not apply");

  OracleSet oracle(problem);
  Rng rng(cfg.seed);
  detail::Recorder rec(problem, cfg, cfg.T);
  Point x = unit_ball_renormalize(detail::start_point(problem, cfg));
  Point sum = Point::Zero(x.size());
  {
    auto& r = rec.add(trace, 0, x, x, oracle);
    r.constraint = domain.g(x);
  }
  for (std::uint64_t t = 1; t <= cfg.T; ++t) {
    sum += x;
    const double weight = logistic_weight(lambda0 * domain.g(x) / gamma);
    Point step = oracle.stochastic_gradient(x, rng);
    if (weight > 0.0) step += weight * lambda0 * domain.grad_g(x);
    const double eta = cfg.schedule ? cfg.schedule->at(t) : 1.0 / (2.0 * beta * static_cast<double>(t));
    x = unit_ball_renormalize(x - eta * step);
    if (rec.due(t)) {
      const Point avg = sum / static_cast<double>(t);
      auto& r = rec.add(trace, t, avg, x, oracle);
      r.constraint = domain.g(avg);
      r.dual = weight * lambda0;
    }
  }
  const Point avg = cfg.T ? Point(sum / static_cast<double>(cfg.T)) : x;
  const Point out = domain.project(avg);
  oracle.count_projection();
  detail::finish(trace, out, oracle);
  return trace;
}

}  // namespace smoothcvx
