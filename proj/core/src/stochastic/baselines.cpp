#include "smoothcvx/stochastic/solvers.hpp"

#include "common.hpp"
#include "smoothcvx/core/prox.hpp"
#include "smoothcvx/core/rng.hpp"

namespace smoothcvx {

using detail::Recorder;

Trace sgd(const Objective& problem, const Domain& domain, const SolverConfig& cfg) {
  OracleSet oracle(problem);
  Rng rng(cfg.seed);
  const StepSchedule sched = cfg.schedule.value_or(StepSchedule::inverse_sqrt(1.0));
  Trace trace;
  trace.seed = cfg.seed;
  trace.note("schedule", sched.describe());
  Recorder rec(problem, cfg, cfg.T);

  Point w = domain.project(detail::start_point(problem, cfg));
  oracle.count_projection();
  Point sum = Point::Zero(w.size());
  rec.add(trace, 0, w, w, oracle);
  for (std::uint64_t t = 1; t <= cfg.T; ++t) {
    sum += w;
    const Point g = oracle.stochastic_gradient(w, rng);
    w = domain.project(w - sched.at(t) * g);
    oracle.count_projection();
    if (rec.due(t)) rec.add(trace, t, Point(sum / static_cast<double>(t)), w, oracle);
  }
  const Point avg = cfg.T ? Point(sum / static_cast<double>(cfg.T)) : w;
  detail::finish(trace, avg, oracle);
  return trace;
}

Trace gd(const Objective& problem, const Domain& domain, const SolverConfig& cfg) {
  OracleSet oracle(problem);
  const StepSchedule sched =
      cfg.schedule.value_or(StepSchedule::constant(1.0 / problem.smoothness()));
  Trace trace;
  trace.seed = cfg.seed;
  trace.note("schedule", sched.describe());
  Recorder rec(problem, cfg, cfg.T);
  Point w = domain.project(detail::start_point(problem, cfg));
  oracle.count_projection();
  rec.add(trace, 0, w, w, oracle);
  for (std::uint64_t t = 1; t <= cfg.T; ++t) {
    w = domain.project(w - sched.at(t) * oracle.full_gradient(w));
    oracle.count_projection();
    if (rec.due(t)) rec.add(trace, t, w, w, oracle);
  }
  detail::finish(trace, w, oracle);
  return trace;
}

Trace agd(const Objective& problem, const Domain& domain, const SolverConfig& cfg) {
  OracleSet oracle(problem);
  const double L = problem.smoothness();
  if (!(L > 0.0)) throw ConfigError("agd needs a positive smoothness constant");
  Trace trace;
  trace.seed = cfg.seed;
  Recorder rec(problem, cfg, cfg.T);
  Point h = domain.project(detail::start_point(problem, cfg));
  oracle.count_projection();
  Point f = h;
  rec.add(trace, 0, h, h, oracle);
  for (std::uint64_t k = 0; k < cfg.T; ++k) {
    const double theta = 2.0 / (static_cast<double>(k) + 2.0);
    const Point g = (1.0 - theta) * h + theta * f;
    f = domain.project(f - oracle.full_gradient(g) / (theta * L));
    oracle.count_projection();
    h = (1.0 - theta) * h + theta * f;
    if (rec.due(k + 1)) rec.add(trace, k + 1, h, h, oracle);
  }
  detail::finish(trace, h, oracle);
  return trace;
}

Trace cgd(const Objective& problem, const Domain& domain, const SolverConfig& cfg) {
  OracleSet oracle(problem);
  Trace trace;
  trace.seed = cfg.seed;
  Recorder rec(problem, cfg, cfg.T);
  Point w = detail::start_point(problem, cfg);
  if (!domain.contains(w, 1e-12)) w = domain.linear_minimizer(Point::Ones(w.size()));
  rec.add(trace, 0, w, w, oracle);
  for (std::uint64_t t = 1; t <= cfg.T; ++t) {
    const Point p = domain.linear_minimizer(oracle.full_gradient(w));
    const double eta = 2.0 / (static_cast<double>(t) + 1.0);
    w = (1.0 - eta) * w + eta * p;
    if (rec.due(t)) rec.add(trace, t, w, w, oracle);
  }
  detail::finish(trace, w, oracle);
  return trace;
}

Trace mirror_descent(const Objective& problem, const Domain& domain, const MirrorMap& map,
                     const SolverConfig& cfg) {
  OracleSet oracle(problem);
  Rng rng(cfg.seed);
  const StepSchedule sched = cfg.schedule.value_or(StepSchedule::inverse_sqrt(1.0));
  Trace trace;
  trace.seed = cfg.seed;
  trace.note("schedule", sched.describe());
  Recorder rec(problem, cfg, cfg.T);
  const auto d = static_cast<Eigen::Index>(problem.dim());
  Point x;
  if (cfg.w0.size()) x = cfg.w0;
  else if (map.kind() == MirrorKind::entropy) x = Point::Constant(d, 1.0 / static_cast<double>(d));
  else x = Point::Zero(d);
  x = prox_step(map, domain, x, Point::Zero(d), 1.0);
  Point sum = Point::Zero(d);
  rec.add(trace, 0, x, x, oracle);
  for (std::uint64_t t = 1; t <= cfg.T; ++t) {
    sum += x;
    x = prox_step(map, domain, x, oracle.stochastic_gradient(x, rng), sched.at(t));
    oracle.count_projection();
    if (rec.due(t)) rec.add(trace, t, Point(sum / static_cast<double>(t)), x, oracle);
  }
  detail::finish(trace, cfg.T ? Point(sum / static_cast<double>(cfg.T)) : x, oracle);
  return trace;
}

}  // namespace smoothcvx
