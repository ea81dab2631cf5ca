#include "smoothconvex/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "smoothcvx/adversary/generators.hpp"
#include "smoothcvx/adversary/variation.hpp"
#include "smoothcvx/core/errors.hpp"
#include "smoothcvx/metrics/reference.hpp"
#include "smoothcvx/metrics/regret.hpp"
#include "smoothcvx/metrics/slope.hpp"
#include "smoothcvx/online/bandit.hpp"
#include "smoothcvx/online/expert.hpp"
#include "smoothcvx/online/explicit_max.hpp"
#include "smoothcvx/online/iftrl.hpp"
#include "smoothcvx/online/ogd.hpp"
#include "smoothcvx/online/omp.hpp"
#include "smoothcvx/online/soft_constraints.hpp"
#include "smoothcvx/problems/linear_models.hpp"
#include "smoothcvx/problems/noisy_quadratic.hpp"
#include "smoothcvx/problems/onedim.hpp"
#include "smoothcvx/problems/smoothed_hinge.hpp"
#include "smoothcvx/problems/synthetic.hpp"
#include "smoothcvx/stochastic/solvers.hpp"

namespace smoothconvex {

using namespace smoothcvx;

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::size_t positive(const Params& p, const std::string& key) {
  const auto v = p.integer(key);
  if (v <= 0) throw ConfigError(key + " must be positive");
  return static_cast<std::size_t>(v);
}

// Rows of a per-round trace: about 200 evenly spaced rounds plus the last one.
bool due(std::size_t t, std::size_t T) {
  const std::size_t stride = std::max<std::size_t>(1, T / 200);
  return t % stride == 0 || t == T;
}

// Average of the round losses as an objective, for comparators of smooth sequences.
class AverageLoss final : public Objective {
 public:
  AverageLoss(const LossSequence& seq, double smoothness) : L_(smoothness) {
    for (std::size_t t = 1; t <= seq.rounds(); ++t) losses_.push_back(seq.at(t));
    dim_ = seq.dim();
  }
  std::size_t dim() const override { return dim_; }
  double value(const Point& x) const override {
    double s = 0.0;
    for (const auto& f : losses_) s += f.value(x);
    return s / static_cast<double>(losses_.size());
  }
  Point gradient(const Point& x) const override {
    Point g = Point::Zero(x.size());
    for (const auto& f : losses_) g += f.gradient(x);
    return g / static_cast<double>(losses_.size());
  }
  double smoothness() const override { return L_; }

 private:
  std::vector<RoundLoss> losses_;
  std::size_t dim_ = 0;
  double L_;
};

double ratio_spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo;
}

// ---------------------------------------------------------------- stochastic

RunResult emgd_variance(const Params& p, std::uint64_t seed) {
  Rng rng(seed);
  const auto data = make_classification_data(positive(p, "n"), positive(p, "d"), rng);
  const LogisticProblem problem(data, p.real("lambda"));
  const auto ref = reference_optimum(problem);
  const Point zero = Point::Zero(static_cast<Eigen::Index>(problem.dim()));
  const double lambda = problem.strong_convexity();

  SolverConfig cfg;
  cfg.seed = seed;
  cfg.T = 0;
  cfg.f_star = ref.value;
  cfg.emgd.m = positive(p, "epochs");
  cfg.emgd.T_cap = positive(p, "T_cap");
  cfg.emgd.delta = p.real("delta");
  cfg.emgd.Delta1 = std::max(std::sqrt(2.0 / lambda * (problem.value(zero) - ref.value)), ref.w.norm());
  cfg.emgd.probe_variance = true;
  const Trace tr = emgd(problem, Domain::ball(p.real("radius")), cfg);

  RunResult out;
  out.table.columns = {"iter", "objective", "suboptimality", "calls_full", "calls_stochastic", "variance_sgd",
                       "variance_mixed"};
  std::vector<double> epochs, logvar;
  for (const auto& r : tr.records) {
    out.table.add({static_cast<double>(r.iter), r.objective, r.suboptimality, static_cast<double>(r.calls_full),
                   static_cast<double>(r.calls_stochastic), r.variance_sgd, r.variance_mixed});
    if (r.iter >= 1 && r.variance_mixed > 0.0) {
      epochs.push_back(static_cast<double>(r.iter));
      logvar.push_back(std::log10(r.variance_mixed));
    }
  }
  const auto mixed = out.table.values("variance_mixed");
  out.final_metric = mixed.size() > 1 ? mixed.back() / mixed[1] : kNan;
  out.slope = epochs.size() >= 2 ? linear_slope(epochs, logvar) : kNan;
  return out;
}

RunResult mixedgrad_rate(const Params& p, std::uint64_t seed) {
  Rng rng(seed);
  const auto data = make_low_rank_regression_data(positive(p, "n"), positive(p, "d"), positive(p, "rank"),
                                                  p.real("noise"), rng);
  const LeastSquaresProblem problem(data, 0.0);
  const Point w_star = problem.normal_equations_solution();
  const double f_star = problem.value(w_star);
  const Domain ball = Domain::ball(p.real("radius"));
  if (!ball.contains(w_star)) throw ConfigError("radius too small: the minimizer lies outside the ball");

  RunResult out;
  out.table.columns = {"iter", "objective", "suboptimality", "calls_full", "calls_stochastic"};
  std::vector<double> calls, subs;
  for (auto m = p.integer("m_min"); m <= p.integer("m_max"); ++m) {
    if (m <= 0) throw ConfigError("m_min must be positive");
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.T = 0;
    cfg.f_star = f_star;
    cfg.mixed.m = static_cast<std::uint64_t>(m);
    cfg.mixed.gamma = p.real("gamma");
    cfg.mixed.T1 = static_cast<std::uint64_t>(std::max<std::int64_t>(0, p.integer("T1")));
    const Trace tr = mixed_grad(problem, ball, cfg);
    const double value = problem.value(tr.solution);
    out.table.add({static_cast<double>(m), value, value - f_star, static_cast<double>(tr.counters.full),
                   static_cast<double>(tr.counters.stochastic)});
    calls.push_back(static_cast<double>(tr.counters.stochastic));
    subs.push_back(value - f_star);
  }
  out.final_metric = subs.back();
  out.slope = calls.size() >= 2 ? loglog_slope(calls, subs) : kNan;
  return out;
}

RunResult clippedsgd_target(const Params& p, std::uint64_t seed) {
  const OneDimTargetRisk problem(p.real("delta"));
  SolverConfig cfg;
  cfg.seed = seed;
  cfg.T = 0;
  cfg.f_star = problem.eps_opt();
  cfg.clipped.epsilon = p.real("epsilon");
  cfg.clipped.tau = p.real("tau");
  cfg.clipped.target_risk = p.real("target_factor") * problem.eps_opt();
  const Trace tr = clipped_sgd(problem, Domain::ball(p.real("radius")), cfg);

  RunResult out;
  out.table.columns = {"iter", "objective", "suboptimality", "calls_stochastic"};
  for (const auto& r : tr.records)
    out.table.add({static_cast<double>(r.iter), r.objective, r.suboptimality, static_cast<double>(r.calls_stochastic)});
  const double bound = (1.0 + cfg.clipped.tau / (1.0 - cfg.clipped.epsilon)) * cfg.clipped.target_risk;
  out.final_metric = problem.value(tr.solution) / bound;
  out.slope = kNan;
  return out;
}

NoisyQuadratic constrained_quadratic(const Params& p, bool strongly_convex) {
  Rng rng(static_cast<std::uint64_t>(p.integer("problem_seed")));
  const auto d = static_cast<Eigen::Index>(positive(p, "d"));
  Point eig(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    // Half of the spectrum is flat in the general case.
    eig[i] = strongly_convex ? 1.0 - 0.6 * static_cast<double>(i) / static_cast<double>(std::max<Eigen::Index>(1, d - 1))
                             : (2 * i < d ? std::pow(0.5, static_cast<double>(i)) : 0.0);
  }
  Point c(d);
  for (auto& v : c) v = rng.normal();
  c *= p.real("center_norm") / c.norm();
  return NoisyQuadratic(random_psd(eig, rng), c, p.real("noise"));
}

RunResult one_projection(const Params& p, std::uint64_t seed, bool strong) {
  const NoisyQuadratic problem = constrained_quadratic(p, strong);
  const Domain K = Domain::ball(p.real("radius"));
  const auto ref = reference_optimum(problem, K);
  RunResult out;
  out.table.columns = {"iter", "objective", "suboptimality", "violation", "calls_stochastic"};
  std::vector<double> Ts, subs, ratios;
  for (const double T : p.reals("T_list")) {
    if (!(T >= 1.0)) throw ConfigError("T_list entries must be >= 1");
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.T = static_cast<std::uint64_t>(T);
    cfg.f_star = ref.value;
    const Trace tr = strong ? sgd_st(problem, K, cfg) : sgd_pd(problem, K, cfg);
    const double value = problem.value(tr.solution);
    out.table.add({T, value, value - ref.value, K.g(tr.solution), static_cast<double>(tr.counters.stochastic)});
    Ts.push_back(T);
    subs.push_back(std::max(value - ref.value, 1e-300));
    ratios.push_back(subs.back() * T / std::log(std::max(T, 2.0)));
  }
  out.slope = Ts.size() >= 2 ? loglog_slope(Ts, subs) : kNan;
  out.final_metric = strong ? ratio_spread(ratios) : subs.back();
  return out;
}

// ---------------------------------------------------------------- online

RunResult gv_regret_sweep(const Params& p, std::uint64_t) {
  const std::size_t T = positive(p, "T");
  const std::size_t d = positive(p, "d");
  const double L = p.real("smoothness");
  const Domain W = Domain::ball(1.0);
  RunResult out;
  out.table.columns = {"iter", "egv", "regret_omp", "regret_iftrl"};
  std::vector<double> egvs, regrets;
  std::size_t row = 0;
  for (const double target : p.reals("egv_list")) {
    const LossSequence seq = linear_with_variation(target, T, d);
    const double egv = egv_sup(seq);
    const double eta = omp_tuned_eta(L, egv);
    Omp omp(d, W, L, eta);
    Iftrl iftrl(d, W, L, eta);
    const auto r_omp = regret_trace(play(omp, seq).decisions, seq, W).back();
    const auto r_iftrl = regret_trace(play(iftrl, seq).decisions, seq, W).back();
    out.table.add({static_cast<double>(++row), egv, r_omp, r_iftrl});
    egvs.push_back(egv);
    regrets.push_back(r_omp);
  }
  out.final_metric = regrets.back();
  out.slope = egvs.size() >= 2 ? loglog_slope(egvs, regrets) : kNan;
  return out;
}

RunResult ogd_vs_omp(const Params& p, std::uint64_t) {
  const std::size_t T = positive(p, "T");
  const double eta_ogd = p.real("ogd_eta") > 0 ? p.real("ogd_eta") : 1.0 / std::sqrt(static_cast<double>(T));
  const LossSequence seq = ftrl_adversary(eta_ogd, T);
  const Domain W = Domain::ball(1.0);
  Ogd ogd(1, W, StepSchedule::constant(eta_ogd));
  Omp omp(1, W, 1.0, omp_tuned_eta(1.0, egv_sup(seq)));
  const auto r_ogd = regret_trace(play(ogd, seq).decisions, seq, W);
  const auto r_omp = regret_trace(play(omp, seq).decisions, seq, W);
  RunResult out;
  out.table.columns = {"iter", "regret_ogd", "regret_omp"};
  for (std::size_t t = 1; t <= T; ++t)
    if (due(t, T)) out.table.add({static_cast<double>(t), r_ogd[t - 1], r_omp[t - 1]});
  out.final_metric = r_ogd.back() / r_omp.back();
  out.slope = kNan;
  return out;
}

RunResult expert_switch_run(const Params& p, std::uint64_t) {
  const std::size_t m = positive(p, "experts");
  const std::size_t T = positive(p, "T");
  const auto at = static_cast<std::size_t>(std::max<std::int64_t>(0, p.integer("switch_at")));
  const LossSequence seq = expert_switch(m, T, at);
  const double egv = egv_sup(seq, VariationNorm::linf);
  ExpertOmp learner(m, expert_tuned_eta(m, egv));
  const auto reg = regret_trace(play(learner, seq).decisions, seq, Domain::simplex());
  RunResult out;
  out.table.columns = {"iter", "regret", "egv"};
  for (std::size_t t = 1; t <= T; ++t)
    if (due(t, T)) out.table.add({static_cast<double>(t), reg[t - 1], egv});
  out.final_metric = reg.back() / std::sqrt(2.0 * egv * std::log(static_cast<double>(m)));
  out.slope = kNan;
  return out;
}

RunResult bandit_estimate(const Params& p, std::uint64_t seed) {
  const std::size_t d = positive(p, "d");
  const std::size_t T = positive(p, "T");
  const auto dd = static_cast<Eigen::Index>(d);
  // f_t(x) = softplus(<a_t, x>) + (s/2)||x - c_t||^2 with slowly rotating a_t and c_t.
  Rng rng(seed);
  Point a0(dd), a1(dd), c0(dd);
  for (auto& v : a0) v = rng.normal();
  for (auto& v : a1) v = rng.normal();
  for (auto& v : c0) v = rng.normal();
  a0 /= a0.norm();
  a1 -= a1.dot(a0) * a0;
  a1 /= a1.norm();
  c0 *= 0.5 / c0.norm();
  const double s = p.real("curvature");
  const double L = 0.25 + s;
  const double speed = p.real("speed");
  const LossSequence seq("bandit_smooth", T, d, [=](std::size_t t) {
    const double th = speed * static_cast<double>(t);
    const Point a = std::cos(th) * a0 + std::sin(th) * a1;
    const Point c = c0;
    auto value = [a, c, s](const Point& x) {
      const double z = a.dot(x);
      return (z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z))) + 0.5 * s * (x - c).squaredNorm();
    };
    auto grad = [a, c, s](const Point& x) -> Point { return logistic_weight(a.dot(x)) * a + s * (x - c); };
    return RoundLoss::custom(a.size(), value, grad, 0.25 + s);
  });

  BanditParams bp;
  bp.radius = 1.0;
  bp.lipschitz = 1.0 + s * 1.5;
  bp.smoothness = L;
  bp.horizon = T;
  bp.delta = p.real("delta");
  BanditOmp learner(d, bp);
  RunResult out;
  out.table.columns = {"iter", "estimate_error", "error_bound", "regret", "value_queries"};
  const Point best = reference_optimum(AverageLoss(seq, L), Domain::ball(1.0), 20000, 1e-10).w;
  double worst = 0.0, regret = 0.0;
  for (std::size_t t = 1; t <= T; ++t) {
    const Point x = learner.predict();
    const RoundLoss f = seq.at(t);
    learner.observe(f);
    const double err = (learner.last_estimate() - f.gradient(x)).norm();
    const double bound = std::sqrt(static_cast<double>(d)) * L * learner.delta() / 2.0;
    worst = std::max(worst, err / bound);
    regret += f.value(x) - f.value(best);
    if (due(t, T))
      out.table.add({static_cast<double>(t), err, bound, regret, static_cast<double>(learner.counters().values)});
  }
  out.final_metric = worst;
  out.slope = kNan;
  return out;
}

RunResult soft_constraints_run(const Params& p, std::uint64_t seed) {
  const std::size_t T = positive(p, "T");
  const LossSequence seq = drifting_quadratics(p.real("speed"), T, 2, p.real("center_radius"));
  Point cc(2);
  cc << p.real("constraint_x"), p.real("constraint_y");
  const std::vector<Domain> cons{Domain::ball(p.real("constraint_radius"), cc)};
  std::vector<RoundLoss> losses;
  losses.reserve(T);
  for (std::size_t t = 1; t <= T; ++t) losses.push_back(seq.at(t));
  const SoftConstants C = estimate_soft_constants(losses, cons, 1.0, 2, seed);
  const Comparator best = best_fixed(seq, cons[0]);

  auto run = [&](SoftVariant v) {
    SoftParams sp;
    sp.variant = v;
    sp.constants = C;
    sp.horizon = T;
    SoftOgd learner(2, cons, sp);
    return play(learner, seq).decisions;
  };
  const auto xs = run(SoftVariant::standard);
  const auto xt = run(SoftVariant::no_violation);
  const auto reg = regret_trace(xs, seq, best);
  const auto reg_t = regret_trace(xt, seq, best);
  const auto vio = violation(xs, cons)[0];
  const auto vio_t = violation(xt, cons)[0];
  RunResult out;
  out.table.columns = {"iter", "regret", "violation", "regret_tight", "violation_tight"};
  for (std::size_t t = 1; t <= T; ++t)
    if (due(t, T)) out.table.add({static_cast<double>(t), reg[t - 1], vio[t - 1], reg_t[t - 1], vio_t[t - 1]});
  out.final_metric = vio.back() / soft_violation_bound(C, 1, T);
  out.slope = kNan;
  return out;
}

RunResult penalty_impossibility(const Params& p, std::uint64_t) {
  const std::size_t T = positive(p, "T");
  const double delta = p.real("delta");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("penalty weight delta must lie in (0, 1)");
  Point xbar(2);
  xbar << 1.0, 0.0;
  // g(x) = 1 - <xbar, x>: feasible only at xbar inside the unit ball.
  const std::vector<Domain> cons{Domain::halfspace(-xbar, -1.0)};
  const LossSequence seq = constant_sequence(RoundLoss::linear(xbar), T);
  SoftParams sp;
  sp.variant = SoftVariant::penalty;
  sp.constants = SoftConstants{1.0, 2.0, 2.0, 1.0};
  sp.horizon = T;
  sp.delta = delta;
  SoftOgd learner(2, cons, sp);
  const auto vio = violation(play(learner, seq).decisions, cons)[0];
  RunResult out;
  out.table.columns = {"iter", "violation"};
  for (std::size_t t = 1; t <= T; ++t)
    if (due(t, T)) out.table.add({static_cast<double>(t), vio[t - 1]});
  out.final_metric = vio.back() / static_cast<double>(T);
  out.slope = kNan;
  return out;
}

RunResult psi_table(const Params& p, std::uint64_t) {
  RunResult out;
  out.table.columns = {"eta", "gamma", "psi", "lower_bound"};
  double gap = std::numeric_limits<double>::infinity();
  for (const double gamma : p.reals("gammas"))
    for (const double eta : p.reals("etas")) {
      const double psi = psi_transform(eta, gamma);
      const double lb = psi_lower_bound(eta, gamma);
      out.table.add({eta, gamma, psi, lb});
      gap = std::min(gap, psi - lb);
    }
  out.final_metric = gap;
  out.slope = kNan;
  return out;
}

RunResult hinge_mistakes(const Params& p, std::uint64_t seed) {
  const std::size_t T = positive(p, "T");
  const std::size_t d = positive(p, "d");
  const double R = p.real("radius");
  Rng rng(seed);
  const LossSequence seq = classification_stream(p.real("drift"), T, d, rng);
  const double egv = egv_sup(seq);
  HingeMistakeLearner learner(d, R, p.real("eta") > 0 ? p.real("eta") : HingeMistakeLearner::tuned_eta(egv));
  std::vector<RoundLoss> mistaken;
  RunResult out;
  out.table.columns = {"iter", "mistakes", "egv"};
  double egv_t = 0.0;
  Point prev = Point::Zero(static_cast<Eigen::Index>(d));
  for (std::size_t t = 1; t <= T; ++t) {
    const RoundLoss f = seq.at(t);
    learner.predict();
    learner.observe(f);
    if (learner.last_was_mistake()) mistaken.push_back(f);
    egv_t += (f.vector() - prev).squaredNorm();
    prev = f.vector();
    if (due(t, T)) out.table.add({static_cast<double>(t), static_cast<double>(learner.mistakes()), egv_t});
  }
  double hinge_best = 0.0;
  if (!mistaken.empty() && d <= 3) {
    hinge_best = grid_minimize(
                     [&](const Point& w) {
                       double s = 0.0;
                       for (const auto& f : mistaken) s += f.value(w);
                       return s;
                     },
                     Domain::ball(R), d)
                     .total_loss;
  }
  const double bound = hinge_best + std::sqrt(2.0) * (R * R + 1.0) * std::max(2.0, std::sqrt(egv));
  out.final_metric = static_cast<double>(learner.mistakes()) / bound;
  out.slope = kNan;
  return out;
}

}  // namespace

const std::vector<Experiment>& registry() {
  static const std::vector<Experiment> r = {
      {"emgd_variance", "EMGD on regularized logistic regression with exact gradient variances per epoch",
       {{"n", "500", "examples"},
        {"d", "20", "features"},
        {"lambda", "0.01", "l2 regularization"},
        {"epochs", "10", "number of epochs m"},
        {"T_cap", "10000", "cap on the prescribed epoch length"},
        {"delta", "0.1", "failure probability in the epoch-length formula"},
        {"radius", "1e6", "radius of the ball domain"}},
       emgd_variance},
      {"mixedgrad_rate", "MixedGrad suboptimality against stochastic calls on rank-deficient least squares",
       {{"n", "200", "examples"},
        {"d", "10", "features"},
        {"rank", "3", "rank of the design"},
        {"noise", "0.5", "label noise"},
        {"radius", "10", "radius R of the ball domain"},
        {"gamma", "2", "shrink factor"},
        {"T1", "0", "first epoch length, 0 for the default"},
        {"m_min", "4", "fewest epochs"},
        {"m_max", "8", "most epochs"}},
       mixedgrad_rate},
      {"clippedsgd_target", "ClippedSGD on the one-dimensional target-risk problem",
       {{"delta", "0.05", "problem parameter"},
        {"target_factor", "2", "target risk as a multiple of the optimal risk"},
        {"epsilon", "0.5", "domain contraction"},
        {"tau", "0.5", "target-risk weight"},
        {"radius", "1", "initial ball radius"}},
       clippedsgd_target},
      {"oneproj_general", "SGD with one projection (primal-dual) on a convex quadratic over a ball",
       {{"d", "5", "dimension"},
        {"radius", "0.8", "constraint ball radius"},
        {"center_norm", "1.5", "norm of the unconstrained minimizer"},
        {"noise", "0.5", "gradient noise norm"},
        {"problem_seed", "7", "seed of the problem instance"},
        {"T_list", "1000,3000,10000,30000,100000", "budgets"}},
       [](const Params& p, std::uint64_t s) { return one_projection(p, s, false); }},
      {"oneproj_strong", "SGD with one projection (smoothing) on a strongly convex quadratic over a ball",
       {{"d", "5", "dimension"},
        {"radius", "0.8", "constraint ball radius"},
        {"center_norm", "1.5", "norm of the unconstrained minimizer"},
        {"noise", "0.5", "gradient noise norm"},
        {"problem_seed", "7", "seed of the problem instance"},
        {"T_list", "1000,10000,100000", "budgets"}},
       [](const Params& p, std::uint64_t s) { return one_projection(p, s, true); }},
      {"gv_regret_sweep", "OMP and IFTRL regret across gradual-variation levels",
       {{"T", "10000", "rounds"},
        {"d", "2", "dimension"},
        {"smoothness", "1", "smoothness constant L"},
        {"egv_list", "1,4,16,64", "gradual-variation targets"}},
       gv_regret_sweep},
      {"ogd_vs_omp_adversary", "OGD and OMP against the FTRL lower-bound adversary",
       {{"T", "10000", "rounds"}, {"ogd_eta", "0", "OGD step, 0 for 1/sqrt(T)"}},
       ogd_vs_omp},
      {"expert_switch", "Expert-advice OMP against a one-switch adversary",
       {{"experts", "4", "number of experts m"}, {"T", "10000", "rounds"}, {"switch_at", "5000", "switch round"}},
       expert_switch_run},
      {"bandit_estimate", "Multi-point bandit OMP: gradient-estimate error and value queries",
       {{"d", "5", "dimension"},
        {"T", "1000", "rounds"},
        {"delta", "0.01", "finite-difference step"},
        {"curvature", "0.5", "quadratic part of the losses"},
        {"speed", "0.002", "rotation per round of the linear part"}},
       bandit_estimate},
      {"soft_constraints", "OGD with long-term constraints and the zero-violation variant",
       {{"T", "10000", "rounds"},
        {"speed", "0.001", "rotation per round of the quadratic centers"},
        {"center_radius", "0.9", "radius of the center path"},
        {"constraint_radius", "0.5", "radius of the constraint ball"},
        {"constraint_x", "-0.2", "constraint ball center, first coordinate"},
        {"constraint_y", "0.1", "constraint ball center, second coordinate"}},
       soft_constraints_run},
      {"penalty_impossibility", "Penalty OGD on the instance where it violates linearly",
       {{"T", "1000", "rounds"}, {"delta", "0.5", "penalty weight in (0, 1)"}},
       penalty_impossibility},
      {"psi_transform_table", "Closed-form psi transform of the smoothed hinge loss and its lower bound",
       {{"etas", "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9", "eta grid"}, {"gammas", "1,10,100", "gamma grid"}},
       psi_table},
      {"hinge_mistakes", "Mistake-driven primal-dual learner on a drifting classification stream",
       {{"T", "2000", "rounds"},
        {"d", "2", "dimension"},
        {"drift", "0.05", "per-round change of y x"},
        {"radius", "1", "ball radius R"},
        {"eta", "0", "step, 0 for the tuned value"}},
       hinge_mistakes},
  };
  return r;
}

const Experiment* find_experiment(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace smoothconvex
