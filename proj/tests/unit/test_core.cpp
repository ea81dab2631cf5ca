#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "helpers.hpp"
#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/core/errors.hpp"
#include "smoothcvx/core/mirror.hpp"
#include "smoothcvx/core/oracle.hpp"
#include "smoothcvx/core/prox.hpp"
#include "smoothcvx/core/schedule.hpp"
#include "smoothcvx/core/trace.hpp"
#include "smoothcvx/problems/linear_models.hpp"
#include "smoothcvx/problems/synthetic.hpp"
#include "smoothcvx/stochastic/solvers.hpp"

using namespace smoothcvx;
using testing::random_point;
using testing::vec;

namespace {

// Nearest simplex point by enumerating every support set (d <= 4).
Point simplex_oracle(const Point& x) {
  const auto d = x.size();
  Point best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    double sum = 0.0;
    int k = 0;
    for (Eigen::Index i = 0; i < d; ++i)
      if (mask & (1u << i)) sum += x[i], ++k;
    const double shift = (sum - 1.0) / k;
    Point p = Point::Zero(d);
    bool ok = true;
    for (Eigen::Index i = 0; i < d; ++i)
      if (mask & (1u << i)) {
        p[i] = x[i] - shift;
        ok = ok && p[i] >= -1e-15;
      }
    if (ok && (p - x).norm() < best_dist) {
      best_dist = (p - x).norm();
      best = p;
    }
  }
  return best;
}

std::vector<Domain> sample_domains() {
  return {Domain::ball(1.0), Domain::ball(0.5, vec({0.2, -0.1, 0.3})),
          Domain::box(vec({-1, 0, -0.5}), vec({1, 2, 0.5})), Domain::simplex(), Domain::l1_ball(1.5),
          Domain::halfspace(vec({1, -2, 0.5}), 0.3)};
}

// Uniform feasible point by rejection from a bounding box, or a projected Gaussian.
Point feasible_point(const Domain& D, Rng& rng) {
  return D.project(random_point(rng, 3, 2.0));
}

}  // namespace

TEST_CASE("ball projection scales radially") {
  const Point p = Domain::ball(1.0).project(vec({3, 4}));
  CHECK(p[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(p[1] == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("simplex projection examples") {
  const Point a = vec({0.3, 0.2, 0.5});
  CHECK((Domain::simplex().project(a) - a).norm() < 1e-15);
  const Point x = vec({1.2, -0.2, 0.0});
  const Point p = Domain::simplex().project(x);
  CHECK((p - simplex_oracle(x)).norm() < 1e-12);
  CHECK((p - vec({1, 0, 0})).norm() < 1e-12);
}

TEST_CASE("simplex projection agrees with the active-set oracle") {
  Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(k % 3);
    const Point x = random_point(rng, d, 1.5);
    CHECK((project_simplex(x) - simplex_oracle(x)).norm() < 1e-12);
  }
}

TEST_CASE("l1 ball projection matches the simplex reduction on the positive orthant") {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const Point x = random_point(rng, 4, 2.0);
    const Point p = project_l1_ball(x, 1.0);
    CHECK(p.lpNorm<1>() <= 1.0 + 1e-12);
    // Sign pattern is kept and magnitudes come from the scaled simplex.
    CHECK((p.cwiseAbs() - (x.lpNorm<1>() <= 1.0 ? x.cwiseAbs() : project_simplex(x.cwiseAbs(), 1.0))).norm() <
          1e-12);
  }
}

TEST_CASE("projection errors") {
  CHECK_THROWS_AS(Domain::ball(1.0).project(Point()), InputError);
  CHECK_THROWS_AS(Domain::box(vec({0, 0}), vec({1, 1})).project(vec({1, 2, 3})), InputError);
  CHECK_THROWS_AS(Domain::box(vec({0, 2}), vec({1, 1})), ConfigError);
  CHECK_THROWS_AS(Domain::ball(-1.0), ConfigError);
}

TEST_CASE("projection idempotence, optimality and non-expansiveness") {
  Rng rng(2024);
  for (const Domain& D : sample_domains()) {
    CAPTURE(to_string(D.kind()));
    for (int k = 0; k < 1000; ++k) {
      const Point x = random_point(rng, 3, 3.0);
      const Point p = D.project(x);
      const Point pp = D.project(p);
      const bool closed = D.kind() == DomainKind::box || D.kind() == DomainKind::ball ||
                          D.kind() == DomainKind::halfspace;
      if (closed) CHECK((pp.array() == p.array()).all());
      else CHECK((pp - p).norm() <= 1e-12);
      CHECK(D.contains(p, 1e-12));
    }
    for (int k = 0; k < 100; ++k) {
      const Point x = random_point(rng, 3, 3.0);
      const Point p = D.project(x);
      const Point y = feasible_point(D, rng);
      CHECK((x - p).norm() <= (x - y).norm() + 1e-12);
      const Point x2 = random_point(rng, 3, 3.0);
      CHECK((p - D.project(x2)).norm() <= (x - x2).norm() + 1e-12);
    }
  }
}

TEST_CASE("constraint gradient bounds on the ball boundary") {
  Rng rng(3);
  const Domain D = Domain::ball(0.8);
  const auto c = D.constants(4, 1.0);
  CHECK(c.rho == doctest::Approx(1.6));
  for (int k = 0; k < 500; ++k) {
    Point x = random_point(rng, 4);
    x *= 0.8 / x.norm();
    const double n = D.grad_g(x).norm();
    CHECK(n >= c.rho - 1e-12);
    CHECK(n <= c.G2 + 1e-12);
    CHECK(std::abs(D.g(x)) < 1e-12);
  }
}

TEST_CASE("two-ball intersection projection agrees with Dykstra") {
  Rng rng(9);
  const Point c1 = vec({0, 0}), c2 = vec({0.8, 0.3});
  for (int k = 0; k < 200; ++k) {
    const Point x = random_point(rng, 2, 2.0);
    const Point exact = project_two_balls(x, c1, 1.0, c2, 0.6);
    const Point approx = dykstra_project(Domain::ball(1.0, c1), Domain::ball(0.6, c2), x, 5000, 1e-14);
    CHECK((exact - approx).norm() < 1e-6);
  }
  CHECK_THROWS_AS(project_two_balls(vec({0, 0}), c1, 0.1, vec({5, 0}), 0.1), NumericError);
}

TEST_CASE("bregman divergence examples") {
  const MirrorMap e = MirrorMap::euclidean();
  CHECK(bregman(e, vec({1, 0}), vec({0, 0})) == doctest::Approx(0.5));
  CHECK(bregman(e, vec({0.3, 2}), vec({0.3, 2})) == 0.0);
  const MirrorMap h = MirrorMap::entropy();
  CHECK(bregman(h, vec({0.2, 0.8}), vec({0.2, 0.8})) == doctest::Approx(0.0).epsilon(1e-15));
  const Point p = vec({0.5, 0.5}), q = vec({0.25, 0.75});
  double kl = 0.0;
  for (Eigen::Index i = 0; i < 2; ++i) kl += p[i] * std::log(p[i] / q[i]);
  CHECK(bregman(h, p, q) == doctest::Approx(kl).epsilon(1e-12));
  CHECK(kl == doctest::Approx(0.14384).epsilon(1e-4));
  CHECK_THROWS_AS(bregman(h, vec({0.0, 1.0}), q), DomainError);
}

TEST_CASE("mirror map invariants") {
  Rng rng(4);
  for (const MirrorMap& m : {MirrorMap::euclidean(), MirrorMap::entropy()}) {
    for (int k = 0; k < 200; ++k) {
      Point x = random_point(rng, 4).cwiseAbs() + Point::Constant(4, 1e-3);
      Point y = random_point(rng, 4).cwiseAbs() + Point::Constant(4, 1e-3);
      if (m.kind() == MirrorKind::entropy) {
        x /= x.sum();
        y /= y.sum();
      }
      CHECK((m.grad_inv(m.grad(x)) - x).norm() <= 1e-10);
      CHECK(m.bregman(x, x) == doctest::Approx(0.0).epsilon(1e-14));
      const double n = m.norm(x - y);
      CHECK(m.bregman(x, y) >= 0.5 * m.alpha() * n * n - 1e-12);
    }
  }
}

TEST_CASE("prox step examples") {
  const Domain box = Domain::box(vec({-1e9, -1e9}), vec({1e9, 1e9}));
  const Point p = prox_step(MirrorMap::euclidean(), box, vec({1, 1}), vec({1, 0}), 0.5);
  CHECK((p - vec({0.5, 1})).norm() < 1e-15);

  const Point u = prox_step(MirrorMap::entropy(), Domain::simplex(), vec({0.5, 0.5}), vec({0, 0}), 3.0);
  CHECK((u - vec({0.5, 0.5})).norm() < 1e-15);

  // Ball example against a dense grid at resolution 1e-3.
  const Point z = vec({0.9, 0}), g = vec({-1, 0});
  const double eta = 0.5;
  const Point q = prox_step(MirrorMap::euclidean(), Domain::ball(1.0), z, g, eta);
  double best = std::numeric_limits<double>::infinity();
  Point arg(2);
  for (int i = -1000; i <= 1000; ++i)
    for (int j = -1000; j <= 1000; ++j) {
      const Point v = vec({i * 1e-3, j * 1e-3});
      if (v.norm() > 1.0) continue;
      const double h = eta * v.dot(g) + 0.5 * (v - z).squaredNorm();
      if (h < best) best = h, arg = v;
    }
  CHECK((q - arg).norm() <= 2e-3);
  CHECK((q - vec({1, 0})).norm() < 1e-12);
}

TEST_CASE("entropy prox on the simplex is the normalized multiplicative update") {
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    Point z = random_point(rng, 5).cwiseAbs() + Point::Constant(5, 0.01);
    z /= z.sum();
    const Point g = random_point(rng, 5);
    const double eta = 0.1 + rng.uniform();
    Point w = z.array() * (-eta * g.array()).exp();
    w /= w.sum();
    CHECK((prox_step(MirrorMap::entropy(), Domain::simplex(), z, g, eta) - w).norm() < 1e-12);
  }
}

TEST_CASE("euclidean prox equals projected step") {
  Rng rng(77);
  const auto domains = sample_domains();
  for (int k = 0; k < 500; ++k) {
    const Domain& D = domains[static_cast<std::size_t>(k) % domains.size()];
    const Point z = D.project(random_point(rng, 3));
    const Point g = random_point(rng, 3);
    const double eta = 0.01 + 2.0 * rng.uniform();
    CHECK((prox_step(MirrorMap::euclidean(), D, z, g, eta) - D.project(z - eta * g)).norm() <= 1e-10);
  }
  CHECK_THROWS_AS(prox_step(MirrorMap::euclidean(), Domain::ball(1.0), vec({0, 0}), vec({1, 0}), 0.0), ConfigError);
}

TEST_CASE("entropy prox on a ball solves the constrained problem") {
  // Compare the multiplier-bisection solution with projected gradient on the same objective.
  const Domain D = Domain::ball(0.5);
  const Point z = vec({0.2, 0.1, 0.3}), g = vec({-2, 0.5, -1});
  const double eta = 0.7;
  const Point u = prox_step(MirrorMap::entropy(), D, z, g, eta);
  CHECK(u.norm() <= 0.5 + 1e-10);
  const MirrorMap h = MirrorMap::entropy();
  auto obj = [&](const Point& v) { return eta * v.dot(g) + h.bregman(v, z); };
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    Point v = (u + 0.05 * random_point(rng, 3)).cwiseMax(1e-6);
    v = D.project(v);
    CHECK(obj(u) <= obj(v) + 1e-10);
  }
}

TEST_CASE("mahalanobis ball prox") {
  const Point z = vec({0.5, -0.2}), g = vec({3, 1});
  const Matrix I = Matrix::Identity(2, 2);
  CHECK((mahalanobis_ball_prox(I, z, g, 1.0) - Domain::ball(1.0).project(z - g)).norm() < 1e-9);

  Matrix H(2, 2);
  H << 3, 1, 1, 2;
  const Point u = mahalanobis_ball_prox(H, z, g, 1.0);
  auto obj = [&](const Point& v) { return g.dot(v) + 0.5 * (v - z).dot(H * (v - z)); };
  // Projected gradient on the same strongly convex objective as the oracle.
  Point v = Point::Zero(2);
  for (int k = 0; k < 20000; ++k) v = Domain::ball(1.0).project(v - 0.2 * (g + H * (v - z)));
  CHECK(u.norm() <= 1.0 + 1e-10);
  CHECK(obj(u) <= obj(v) + 1e-9);
  CHECK((u - v).norm() < 1e-6);
}

TEST_CASE("clip component") {
  CHECK((clip_component(1.0, vec({2, -0.5})) - vec({1, -0.5})).norm() == 0.0);
  CHECK((clip_component(10.0, vec({2, -0.5})) - vec({2, -0.5})).norm() == 0.0);
  CHECK((clip_component(0.25, vec({-3, 0.25, 0})) - vec({-0.25, 0.25, 0})).norm() == 0.0);
  CHECK_THROWS_AS(clip_component(0.0, vec({1})), ConfigError);
  Rng rng(6);
  for (int k = 0; k < 100; ++k) CHECK(clip_component(0.3, random_point(rng, 5, 2.0)).lpNorm<Eigen::Infinity>() <= 0.3);
}

TEST_CASE("soft threshold") {
  CHECK((soft_threshold(vec({0.3, -2}), 0.5) - vec({0, -1.5})).norm() == 0.0);
}

TEST_CASE("step schedules") {
  CHECK(StepSchedule::constant(0.3).at(7) == 0.3);
  CHECK(StepSchedule::inverse_sqrt(2.0).at(4) == doctest::Approx(1.0));
  CHECK(StepSchedule::inverse_t(2.0).at(4) == doctest::Approx(0.5));
  for (std::uint64_t t = 1; t < 1000; t += 37) CHECK(StepSchedule::inverse_t(1.0).at(t) > 0.0);
}

TEST_CASE("philox known answers") {
  using A4 = std::array<std::uint32_t, 4>;
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("rng streams") {
  Rng a(42), b(42), c(43);
  for (int k = 0; k < 100; ++k) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
  }
  Rng u(1);
  double mean = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const double v = u.uniform();
    CHECK((v >= 0.0 && v < 1.0));
    mean += v;
  }
  CHECK(mean / 1e5 == doctest::Approx(0.5).epsilon(0.01));
  Rng idx(3);
  std::vector<int> counts(7, 0);
  for (int k = 0; k < 70000; ++k) ++counts[idx.index(7)];
  for (int n : counts) CHECK(std::abs(n - 10000) < 500);
}

TEST_CASE("stochastic gradients are unbiased") {
  Rng rng(12);
  const auto data = make_classification_data(50, 3, rng);
  const LogisticProblem p(data, 0.1);
  OracleSet oracle(p);
  const Point w = vec({0.3, -0.7, 1.1});
  const Point full = oracle.full_gradient(w);
  const int N = 100000;
  Point sum = Point::Zero(3), sq = Point::Zero(3);
  Rng draw(99);
  for (int k = 0; k < N; ++k) {
    const Point g = oracle.stochastic_gradient(w, draw);
    sum += g;
    sq += g.cwiseProduct(g);
  }
  const Point mean = sum / N;
  const Point var = sq / N - mean.cwiseProduct(mean);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(std::abs(mean[i] - full[i]) <= 5.0 * std::sqrt(var[i] / N));
  CHECK(oracle.counters().stochastic == static_cast<std::uint64_t>(N));
  CHECK(oracle.counters().full == 1u);
}

TEST_CASE("oracle counters are monotone") {
  Rng rng(1);
  const auto data = make_classification_data(20, 2, rng);
  const LogisticProblem p(data, 0.0);
  OracleSet o(p);
  OracleCounters last = o.counters();
  for (int k = 0; k < 50; ++k) {
    if (k % 3 == 0) o.full_gradient(vec({0, 0}));
    else o.component(rng).gradient(vec({0, 1}));
    const auto& c = o.counters();
    CHECK(c.full >= last.full);
    CHECK(c.stochastic >= last.stochastic);
    last = c;
  }
}

TEST_CASE("equal seeds give identical traces") {
  Rng rng(5);
  const auto data = make_classification_data(100, 4, rng);
  const LogisticProblem p(data, 0.01);
  SolverConfig cfg;
  cfg.seed = 17;
  cfg.T = 2000;
  cfg.record_iterates = true;
  const Trace a = sgd(p, Domain::ball(3.0), cfg);
  const Trace b = sgd(p, Domain::ball(3.0), cfg);
  CHECK(identical(a, b));
  cfg.seed = 18;
  CHECK_FALSE(identical(a, sgd(p, Domain::ball(3.0), cfg)));
}
