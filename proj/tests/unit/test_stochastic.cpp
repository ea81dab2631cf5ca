#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/core/errors.hpp"
#include "smoothcvx/core/mirror.hpp"
#include "smoothcvx/problems/linear_models.hpp"
#include "smoothcvx/problems/noisy_quadratic.hpp"
#include "smoothcvx/problems/onedim.hpp"
#include "smoothcvx/problems/synthetic.hpp"
#include "smoothcvx/stochastic/solvers.hpp"
#include "smoothcvx/stochastic/variance.hpp"

using namespace smoothcvx;
using testing::random_point;
using testing::vec;

namespace {

Matrix mat1(double a) { return Matrix::Constant(1, 1, a); }

// Newton's method on the dense regularized logistic objective.
Point logistic_newton(const LabeledDataset& data, double lambda) {
  const Eigen::MatrixXd X = Eigen::MatrixXd(data.matrix());
  const auto n = X.rows();
  Point w = Point::Zero(X.cols());
  for (int it = 0; it < 50; ++it) {
    Eigen::VectorXd grad = lambda * w;
    Eigen::MatrixXd H = lambda * Eigen::MatrixXd::Identity(X.cols(), X.cols());
    for (Eigen::Index i = 0; i < n; ++i) {
      const double y = data.labels[static_cast<std::size_t>(i)];
      const double s = 1.0 / (1.0 + std::exp(y * X.row(i).dot(w)));
      grad -= (y * s / static_cast<double>(n)) * X.row(i).transpose();
      H += (s * (1 - s) / static_cast<double>(n)) * X.row(i).transpose() * X.row(i);
    }
    const Eigen::VectorXd step = H.ldlt().solve(grad);
    w -= step;
    if (step.norm() < 1e-14) break;
  }
  return w;
}

// argmin of 0.5 (x - c)^T A (x - c) over the simplex, by enumerating supports (d <= 5).
double simplex_quadratic_min(const Matrix& A, const Point& c) {
  const auto d = static_cast<int>(c.size());
  double best = std::numeric_limits<double>::infinity();
  for (int mask = 1; mask < (1 << d); ++mask) {
    std::vector<int> S;
    for (int i = 0; i < d; ++i)
      if (mask >> i & 1) S.push_back(i);
    const auto k = static_cast<Eigen::Index>(S.size());
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(k + 1, k + 1);
    Eigen::VectorXd rhs(k + 1);
    const Point Ac = A * c;
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) K(a, b) = A(S[a], S[b]);
      K(a, k) = K(k, a) = 1.0;
      rhs[a] = Ac[S[a]];
    }
    rhs[k] = 1.0;
    const Eigen::VectorXd sol = K.fullPivLu().solve(rhs);
    if (sol.head(k).minCoeff() < -1e-12) continue;
    Point x = Point::Zero(d);
    for (Eigen::Index a = 0; a < k; ++a) x[S[a]] = std::max(0.0, sol[a]);
    best = std::min(best, 0.5 * (x - c).dot(A * (x - c)));
  }
  return best;
}

}  // namespace

TEST_CASE("sgd hand recursion") {
  const Quadratic f(mat1(2.0), vec({0.0}));  // w^2
  SolverConfig cfg;
  cfg.T = 3;
  cfg.schedule = StepSchedule::constant(0.25);
  cfg.w0 = vec({1.0});
  cfg.record_every = 1;
  cfg.record_iterates = true;
  const Trace tr = sgd(f, Domain::ball(10.0), cfg);
  REQUIRE(tr.records.size() == 4);
  CHECK(tr.records[0].iterate[0] == 1.0);
  CHECK(tr.records[1].iterate[0] == 0.5);
  CHECK(tr.records[2].iterate[0] == 0.25);
  CHECK(tr.solution[0] == doctest::Approx((1.0 + 0.5 + 0.25) / 3.0));
  CHECK(tr.counters.projection == 4);
  CHECK(tr.counters.stochastic == 3);
}

TEST_CASE("sgd improves on strongly convex logistic regression") {
  Rng rng(4);
  const double lambda = 0.1;
  const auto data = make_classification_data(200, 5, rng);
  const LogisticProblem p(data, lambda);
  const double f_star = p.value(logistic_newton(data, lambda));
  CHECK(p.gradient(logistic_newton(data, lambda)).norm() < 1e-12);
  double small = 0.0, large = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.schedule = StepSchedule::inverse_t(1.0 / lambda);
    cfg.T = 100;
    small += p.value(sgd(p, Domain::ball(100.0), cfg).solution) - f_star;
    cfg.T = 10000;
    large += p.value(sgd(p, Domain::ball(100.0), cfg).solution) - f_star;
  }
  CHECK(large >= 0.0);
  CHECK(large < small);
}

TEST_CASE("sgd rate on a noisy quadratic without strong convexity") {
  // Curvatures 1 .. 1e-7 with the optimum at (1, ..., 1): F* = 0 and the slope of the
  // averaged-iterate suboptimality against T is -1/2.
  const NoisyQuadratic p(Matrix(geometric_spectrum(20, 1.0, 1e-7).asDiagonal()), Point::Ones(20), 0.5);
  std::vector<double> logT, logS;
  for (double T : {1e2, 1e3, 1e4, 1e5}) {
    double s = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      SolverConfig cfg;
      cfg.seed = seed;
      cfg.T = static_cast<std::uint64_t>(T);
      s += p.value(sgd(p, Domain::ball(1e3), cfg).solution);
    }
    logT.push_back(std::log(T));
    logS.push_back(std::log(s / 10.0));
  }
  // least-squares slope, computed here rather than with the metrics module
  const double mx = (logT[0] + logT[1] + logT[2] + logT[3]) / 4, my = (logS[0] + logS[1] + logS[2] + logS[3]) / 4;
  double sxy = 0.0, sxx = 0.0;
  for (int i = 0; i < 4; ++i) sxy += (logT[i] - mx) * (logS[i] - my), sxx += (logT[i] - mx) * (logT[i] - mx);
  CHECK(std::abs(sxy / sxx + 0.5) <= 0.15);
}

TEST_CASE("agd solves the identity quadratic immediately") {
  const Quadratic f(Matrix::Identity(6, 6), Point::Zero(6));
  SolverConfig cfg;
  cfg.T = 200;
  cfg.w0 = Point::Ones(6) / std::sqrt(6.0);
  const Trace tr = agd(f, Domain::ball(10.0), cfg);
  CHECK(tr.solution.norm() <= 1e-8);
  CHECK(tr.counters.full == 200);
}

TEST_CASE("cgd takes the minimum-coordinate vertex") {
  CHECK(Domain::simplex().linear_minimizer(vec({3, 1, 2})) == vec({0, 1, 0}));
  // gradient (3, 1, 2) at the barycenter
  const Point w0 = Point::Constant(3, 1.0 / 3.0);
  const Quadratic f(Matrix::Identity(3, 3), w0 - vec({3, 1, 2}));
  SolverConfig cfg;
  cfg.T = 1;
  cfg.w0 = w0;
  CHECK((cgd(f, Domain::simplex(), cfg).solution - vec({0, 1, 0})).norm() < 1e-15);
  CHECK_THROWS_AS(cgd(f, Domain::halfspace(vec({1, 0, 0}), 1.0), cfg), UnsupportedError);
}

TEST_CASE("deterministic baselines meet their rate bounds") {
  Rng rng(12);
  const Matrix A = random_psd(vec({2.0, 1.0, 0.3, 0.05}), rng);
  const Point c = random_point(rng, 4);
  const Quadratic f(A, c);
  const double beta = 2.0;
  for (std::uint64_t T : {10, 50, 200}) {
    SolverConfig cfg;
    cfg.T = T;
    const double dist2 = c.squaredNorm();  // w1 = 0, w* = c
    const double Td = static_cast<double>(T);
    CHECK(f.value(gd(f, Domain::ball(100.0), cfg).solution) <= 2 * beta * dist2 / Td);
    CHECK(f.value(agd(f, Domain::ball(100.0), cfg).solution) <= 2 * beta * dist2 / (Td * Td));
    // simplex diameter squared is 2
    const double f_star = simplex_quadratic_min(A, c);
    cfg.w0 = Point::Constant(4, 0.25);
    CHECK(f.value(cgd(f, Domain::simplex(), cfg).solution) - f_star <= 2 * beta * 2.0 / (Td + 1));
  }
}

TEST_CASE("agd beats gd on an ill-conditioned quadratic") {
  const Quadratic f(Matrix(geometric_spectrum(10, 1.0, 1e-3).asDiagonal()), Point::Ones(10));
  SolverConfig cfg;
  cfg.T = 300;
  const double g = f.value(gd(f, Domain::ball(100.0), cfg).solution);
  const double a = f.value(agd(f, Domain::ball(100.0), cfg).solution);
  CHECK(a * 10.0 <= g);
}

TEST_CASE("mirror descent stays on the simplex") {
  Rng rng(2);
  const Quadratic f(random_psd(vec({1, 0.5, 0.2}), rng), vec({0.2, 0.5, 0.3}));
  SolverConfig cfg;
  cfg.T = 5000;
  const Trace tr = mirror_descent(f, Domain::simplex(), MirrorMap::entropy(), cfg);
  CHECK(tr.solution.minCoeff() > 0.0);
  CHECK(tr.solution.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.value(tr.solution) <= 1e-3);
}

TEST_CASE("clipped sgd domain recursion and clipping level") {
  const Quadratic f(mat1(1.0), vec({10.0}));  // alpha = beta = 1
  SolverConfig cfg;
  cfg.T = 0;
  cfg.clipped.epsilon = 0.5;
  cfg.clipped.tau = 0.1;
  cfg.clipped.target_risk = 0.01;
  cfg.clipped.xi = 2.0;
  cfg.clipped.T1 = 2;
  cfg.clipped.m = 2;
  cfg.clipped.eta = 0.1;
  cfg.record_every = 1;
  const Trace tr = clipped_sgd(f, Domain::ball(0.5), cfg);
  // gamma_1 = 2 xi beta Delta_1 = 2, so the gradient -9.5 at w = 0 is clipped to -2
  // and the first stage averages 0 and 0.2.
  REQUIRE(tr.records.size() == 3);
  CHECK(tr.records[0].radius == 0.5);
  CHECK(tr.records[1].radius == doctest::Approx(std::sqrt(0.5 * 0.25 + 0.001)));
  CHECK(tr.counters.stochastic == 4);
  cfg.clipped.m = 1;
  CHECK(clipped_sgd(f, Domain::ball(0.5), cfg).solution[0] == doctest::Approx(0.1).epsilon(1e-14));

  cfg.clipped.m = 1;
  const Trace unit = clipped_sgd(f, Domain::ball(1.0), cfg);
  CHECK(unit.records[1].radius == doctest::Approx(std::sqrt(0.501)).epsilon(1e-14));
  CHECK(std::sqrt(0.501) == doctest::Approx(0.70781).epsilon(1e-5));

  cfg.clipped.target_risk = 0.0;
  CHECK_THROWS_AS(clipped_sgd(f, Domain::ball(1.0), cfg), ConfigError);
}

TEST_CASE("clipped sgd reaches the target risk on the one-dimensional problem") {
  const OneDimTargetRisk p(0.05);
  const double target = 2.0 * p.eps_opt();
  const double tau = 0.5, eps = 0.5;
  int ok = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.T = 0;
    cfg.clipped.target_risk = target;
    const Trace tr = clipped_sgd(p, Domain::ball(1.0), cfg);
    const auto m = static_cast<std::uint64_t>(std::stod(tr.header.at("m")));
    const auto T1 = static_cast<std::uint64_t>(std::stod(tr.header.at("T1")));
    CHECK(tr.counters.stochastic == m * T1);
    if (p.expected_loss(tr.solution[0]) <= (1 + tau / (1 - eps)) * target * 1.1) ++ok;
  }
  CHECK(ok >= 9);
}

TEST_CASE("mixed grad oracle accounting") {
  Rng rng(5);
  const LeastSquaresProblem p(make_regression_data(30, geometric_spectrum(3, 1, 0.1), 0.1, rng), 0.0);
  SolverConfig cfg;
  cfg.T = 0;
  cfg.mixed.gamma = 2.0;
  cfg.mixed.T1 = 3;
  cfg.mixed.m = 4;
  const Trace tr = mixed_grad(p, Domain::ball(5.0), cfg);
  CHECK(tr.counters.stochastic == 255);
  CHECK(tr.counters.full == 4);
  CHECK(tr.records.back().calls_stochastic == 255);

  cfg.mixed.gamma = 1.0;
  CHECK_THROWS_AS(mixed_grad(p, Domain::ball(5.0), cfg), ConfigError);
  cfg.mixed.gamma = 2.0;
  CHECK_THROWS_AS(mixed_grad(p, Domain::box(vec({-1, -1, -1}), vec({1, 1, 1})), cfg), UnsupportedError);
}

TEST_CASE("mixed grad first inner step uses the full gradient") {
  Rng rng(6);
  const LeastSquaresProblem p(make_regression_data(30, geometric_spectrum(3, 1, 0.1), 0.1, rng), 0.0);
  SolverConfig cfg;
  cfg.T = 0;
  cfg.mixed.T1 = 1;
  cfg.mixed.m = 1;
  cfg.mixed.lambda1 = 1.0;
  cfg.mixed.eta1 = 0.01;
  cfg.mixed.Delta1 = 10.0;
  // w = 0 inside the epoch, so the stochastic correction cancels whatever component is drawn
  const Point expected = -0.5 * 0.01 * p.gradient(Point::Zero(3));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    cfg.seed = seed;
    CHECK((mixed_grad(p, Domain::ball(10.0), cfg).solution - expected).norm() < 1e-16);
  }
}

TEST_CASE("emgd epoch bookkeeping") {
  Rng rng(9);
  const LogisticProblem p(make_classification_data(50, 3, rng), 0.1);
  SolverConfig cfg;
  cfg.T = 0;
  cfg.emgd.m = 6;
  cfg.emgd.T = 20;
  cfg.emgd.Delta1 = 1.0;
  cfg.emgd.probe_variance = true;
  const Trace tr = emgd(p, Domain::ball(10.0), cfg);
  CHECK(tr.records[6].radius == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(tr.counters.full == 6);
  CHECK(tr.counters.stochastic == 120);
  CHECK(tr.records[0].variance_mixed == 0.0);
  CHECK(std::stod(tr.header.at("eta")) == doctest::Approx(1.0 / (p.sample_smoothness() * std::sqrt(20.0))));
  for (const auto& r : tr.records) CHECK(p.value(tr.solution) <= r.objective + 1.0);

  const LogisticProblem flat(make_classification_data(50, 3, rng), 0.0);
  CHECK_THROWS_AS(emgd(flat, Domain::ball(10.0), cfg), ConfigError);
  cfg.emgd.m = 0;
  CHECK_THROWS_AS(emgd(p, Domain::ball(10.0), cfg), ConfigError);
}

TEST_CASE("mixed gradient at the anchor equals the full gradient") {
  Rng rng(10);
  const LogisticProblem p(make_classification_data(40, 4, rng), 0.05);
  const Point c = random_point(rng, 4);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point mixed = p.gradient(c) + (p.component_gradient(i, c) - p.component_gradient(i, c));
    CHECK(mixed == p.gradient(c));
  }
  CHECK(gradient_variance_probe(p, c, c).mixed_var == 0.0);
}

TEST_CASE("emgd halves the gap on regularized logistic regression") {
  Rng rng(11);
  const double lambda = 1e-2;
  const auto data = make_classification_data(500, 20, rng);
  const LogisticProblem p(data, lambda);
  const Point w_star = logistic_newton(data, lambda);
  const double f_star = p.value(w_star);
  const double Delta1 = std::max(std::sqrt(2 * (p.value(Point::Zero(20)) - f_star) / lambda), w_star.norm());
  int good = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SolverConfig cfg;
    cfg.seed = seed;
    cfg.T = 0;
    cfg.emgd.m = 6;
    cfg.emgd.T_cap = 10000;
    cfg.emgd.Delta1 = Delta1;
    const Trace tr = emgd(p, Domain::ball(1e6), cfg);
    bool all = true;
    for (int k = 1; k <= 6; ++k)
      all = all && tr.records[static_cast<std::size_t>(k)].objective - f_star <= lambda * Delta1 * Delta1 / std::pow(2.0, k + 1);
    good += all;
  }
  CHECK(good >= 8);
}

TEST_CASE("sgd-pd dual update and single projection") {
  const Quadratic f(Matrix::Identity(2, 2), vec({0.9, 0.3}));
  const Domain K = Domain::ball(0.5);
  SolverConfig cfg;
  cfg.T = 2;
  cfg.record_every = 1;
  cfg.record_iterates = true;
  cfg.pd.gamma = 0.5;
  cfg.pd.eta = 0.1;

  // g(x1) < 0 with lambda1 = 0 keeps lambda2 = 0
  Trace tr = sgd_pd(f, K, cfg);
  CHECK(tr.records[1].dual == 0.0);

  cfg.w0 = vec({0.9, 0.0});
  tr = sgd_pd(f, K, cfg);
  const double g1 = 0.81 - 0.25;
  CHECK(tr.records[1].dual == doctest::Approx(0.1 * g1).epsilon(1e-14));
  const Point x2 = cfg.w0 - 0.1 * f.gradient(cfg.w0);
  CHECK((tr.records[1].iterate - x2).norm() < 1e-15);
  const double lambda3 = (1 - 0.5 * 0.1) * 0.1 * g1 + 0.1 * K.g(x2);
  CHECK(tr.records[2].dual == doctest::Approx(lambda3).epsilon(1e-14));
  CHECK(tr.counters.projection == 1);
  CHECK(K.g(tr.solution) <= 1e-10);
}

TEST_CASE("sgd-pd with an inactive constraint matches sgd on the unit ball") {
  Rng rng(13);
  const NoisyQuadratic p(random_psd(vec({1.0, 0.5, 0.1}), rng), vec({2.0, -1.0, 0.5}), 0.3);
  const Domain far = Domain::halfspace(vec({1, 1, 1}), 100.0);
  SolverConfig cfg;
  cfg.T = 200;
  cfg.seed = 3;
  cfg.record_every = 1;
  cfg.record_iterates = true;
  cfg.pd.gamma = 0.1;
  cfg.pd.eta = 0.05;
  const Trace pd = sgd_pd(p, far, cfg);
  cfg.schedule = StepSchedule::constant(0.05);
  const Trace plain = sgd(p, Domain::ball(1.0), cfg);
  for (std::size_t t = 1; t < pd.records.size(); ++t) {
    CHECK(pd.records[t].dual == 0.0);
    CHECK((pd.records[t].iterate - plain.records[t].iterate).norm() < 1e-12);
  }
}

TEST_CASE("sgd-st smoothing weight and single projection") {
  CHECK(logistic_weight(-40.0) < 1e-17);
  CHECK(logistic_weight(0.0) == 0.5);
  CHECK(logistic_weight(1e4) == 1.0);
  CHECK(logistic_weight(-1e4) == 0.0);
  for (double x : {-5.0, -0.3, 0.7, 12.0}) CHECK(logistic_weight(x) + logistic_weight(-x) == doctest::Approx(1.0));

  Rng rng(14);
  const NoisyQuadratic p(random_psd(vec({1.0, 0.8, 0.6}), rng), vec({1.0, 1.0, 0.0}), 0.2);
  const Domain K = Domain::ball(0.6, vec({0.1, 0.0, 0.0}));
  SolverConfig cfg;
  cfg.T = 2000;
  cfg.w0 = vec({-0.9, 0.0, 0.0});
  const Trace tr = sgd_st(p, K, cfg);
  CHECK(tr.counters.projection == 1);
  CHECK(K.g(tr.solution) <= 1e-10);
  CHECK(tr.header.count("warning") == 0);

  cfg.st.lambda0 = 1e-3;
  const Trace weak = sgd_st(p, K, cfg);
  CHECK(weak.header.count("warning") == 1);
  CHECK(K.g(weak.solution) <= 1e-10);

  const NoisyQuadratic flat(Matrix(vec({1.0, 0.0, 0.0}).asDiagonal()), Point::Zero(3), 0.1);
  CHECK_THROWS_AS(sgd_st(flat, K, SolverConfig{}), ConfigError);
}

TEST_CASE("gradient variance probe") {
  Rng rng(15);
  const auto one = make_classification_data(1, 3, rng);
  const LogisticProblem single(one, 0.0);
  const Point w = random_point(rng, 3);
  CHECK(gradient_variance_probe(single, w, random_point(rng, 3)).sgd_var == doctest::Approx(0.0).epsilon(1e-30));

  const LogisticProblem p(make_classification_data(50, 4, rng), 0.01);
  const Point x = random_point(rng, 4), c = random_point(rng, 4);
  const auto exact = gradient_variance_probe(p, x, c);
  const Point mean = p.gradient(x), mean_diff = p.gradient(x) - p.gradient(c);
  double s1 = 0, q1 = 0, s2 = 0, q2 = 0;
  const int N = 1000000;
  for (int k = 0; k < N; ++k) {
    const std::size_t i = rng.index(p.size());
    const Point gi = p.component_gradient(i, x);
    const double a = (gi - mean).squaredNorm();
    const double b = (gi - p.component_gradient(i, c) - mean_diff).squaredNorm();
    s1 += a, q1 += a * a, s2 += b, q2 += b * b;
  }
  const double m1 = s1 / N, m2 = s2 / N;
  CHECK(std::abs(m1 - exact.sgd_var) <= 3 * std::sqrt((q1 / N - m1 * m1) / N));
  CHECK(std::abs(m2 - exact.mixed_var) <= 3 * std::sqrt((q2 / N - m2 * m2) / N));
}

TEST_CASE("every solver returns a feasible point") {
  Rng rng(16);
  const LeastSquaresProblem ls(make_regression_data(40, geometric_spectrum(3, 1, 0.2), 0.2, rng), 0.1);
  const Domain ball = Domain::ball(0.3, vec({0.1, 0.0, 0.0}));
  SolverConfig cfg;
  cfg.T = 500;
  cfg.w0 = vec({3, 3, 3});
  CHECK(ball.g(sgd(ls, ball, cfg).solution) <= 1e-10);
  CHECK(ball.g(gd(ls, ball, cfg).solution) <= 1e-10);
  CHECK(ball.g(agd(ls, ball, cfg).solution) <= 1e-10);
  CHECK(ball.g(cgd(ls, ball, cfg).solution) <= 1e-10);
  CHECK(ball.g(mirror_descent(ls, ball, MirrorMap::euclidean(), cfg).solution) <= 1e-10);
  CHECK(ball.g(sgd_pd(ls, ball, cfg).solution) <= 1e-10);
  CHECK(ball.g(sgd_st(ls, ball, cfg).solution) <= 1e-10);
  cfg.emgd.m = 3;
  cfg.emgd.T = 50;
  cfg.emgd.Delta1 = 1.0;
  CHECK(ball.g(emgd(ls, ball, cfg).solution) <= 1e-10);
  cfg.mixed.m = 3;
  cfg.T = 0;
  CHECK(ball.g(mixed_grad(ls, ball, cfg).solution) <= 1e-10);
  const OneDimTargetRisk od(0.1);
  cfg.clipped.target_risk = 0.05;
  cfg.clipped.T1 = 50;
  cfg.w0 = vec({3.0});
  CHECK(Domain::ball(0.5).g(clipped_sgd(od, Domain::ball(0.5), cfg).solution) <= 1e-10);
}

TEST_CASE("solvers are deterministic in the seed") {
  Rng rng(17);
  const LogisticProblem p(make_classification_data(60, 3, rng), 0.05);
  const Domain ball = Domain::ball(2.0);
  SolverConfig cfg;
  cfg.T = 300;
  cfg.seed = 42;
  cfg.record_every = 7;
  cfg.record_iterates = true;
  CHECK(identical(sgd(p, ball, cfg), sgd(p, ball, cfg)));
  CHECK(identical(mirror_descent(p, ball, MirrorMap::euclidean(), cfg), mirror_descent(p, ball, MirrorMap::euclidean(), cfg)));
  CHECK(identical(sgd_pd(p, ball, cfg), sgd_pd(p, ball, cfg)));
  CHECK(identical(sgd_st(p, ball, cfg), sgd_st(p, ball, cfg)));
  cfg.emgd.m = 3;
  cfg.emgd.T = 40;
  cfg.emgd.Delta1 = 1.0;
  CHECK(identical(emgd(p, ball, cfg), emgd(p, ball, cfg)));
  cfg.mixed.m = 3;
  cfg.mixed.T1 = 5;
  CHECK(identical(mixed_grad(p, ball, cfg), mixed_grad(p, ball, cfg)));
  SolverConfig other = cfg;
  other.seed = 43;
  CHECK_FALSE(identical(sgd(p, ball, cfg), sgd(p, ball, other)));
}
