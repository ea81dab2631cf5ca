#include "smoothcvx/metrics/regret.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>

#include "smoothcvx/core/errors.hpp"

namespace smoothcvx {

OnlineRun play(OnlineLearner& learner, const LossSequence& seq) {
  OnlineRun run;
  run.decisions.reserve(seq.rounds());
  run.losses.reserve(seq.rounds());
  for (std::size_t t = 1; t <= seq.rounds(); ++t) {
    const Point x = learner.predict();
    const RoundLoss f = seq.at(t);
    const double v = f.value(x);
    run.decisions.push_back(x);
    run.losses.push_back(v);
    run.total_loss += v;
    learner.observe(f);
  }
  return run;
}

namespace {

struct Box {
  Point lo, hi;
};

Box bounding_box(const Domain& W, std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  switch (W.kind()) {
    case DomainKind::ball: {
      const Point c = W.center().size() ? W.center() : Point::Zero(d);
      return {c.array() - W.radius_param(), c.array() + W.radius_param()};
    }
    case DomainKind::box: return {W.lo(), W.hi()};
    case DomainKind::simplex: return {Point::Zero(d), Point::Ones(d)};
    case DomainKind::l1_ball: return {Point::Constant(d, -W.radius_param()), Point::Constant(d, W.radius_param())};
    case DomainKind::halfspace: break;
  }
  throw UnsupportedError("grid comparator needs a bounded domain");
}

// Visits every grid point lo + h k inside [lo, hi] (per coordinate).
void scan(const Point& lo, const Point& hi, double h, const std::function<void(const Point&)>& visit) {
  const auto d = lo.size();
  std::vector<long> count(static_cast<std::size_t>(d)), k(static_cast<std::size_t>(d), 0);
  for (Eigen::Index i = 0; i < d; ++i)
    count[static_cast<std::size_t>(i)] = static_cast<long>(std::floor((hi[i] - lo[i]) / h + 1e-9)) + 1;
  Point x = lo;
  while (true) {
    visit(x);
    Eigen::Index i = 0;
    for (; i < d; ++i) {
      auto& ki = k[static_cast<std::size_t>(i)];
      if (++ki < count[static_cast<std::size_t>(i)]) {
        x[i] = lo[i] + h * static_cast<double>(ki);
        break;
      }
      ki = 0;
      x[i] = lo[i];
    }
    if (i == d) break;
  }
}

}  // namespace

Comparator grid_minimize(const std::function<double(const Point&)>& h, const Domain& W, std::size_t dim,
                         double coarse, double fine) {
  if (dim == 0 || dim > 3) throw UnsupportedError("grid comparator supports d <= 3, got " + std::to_string(dim));
  if (!(coarse > 0.0) || !(fine > 0.0) || fine > coarse) throw ConfigError("grid steps must satisfy 0 < fine <= coarse");
  Box box = bounding_box(W, dim);
  Comparator best;
  best.total_loss = std::numeric_limits<double>::infinity();
  auto visit = [&](const Point& x) {
    if (!W.contains(x, 1e-12)) return;
    const double v = h(x);
    if (v < best.total_loss) {
      best.total_loss = v;
      best.point = x;
    }
  };
  double step = coarse;
  scan(box.lo, box.hi, step, visit);
  if (best.point.size() == 0) throw NumericError("grid comparator found no feasible grid point");
  while (step > fine * (1.0 + 1e-9)) {
    const double next = std::max(step / 10.0, fine);
    const Point lo = (best.point.array() - step).cwiseMax(box.lo.array()).matrix();
    const Point hi = (best.point.array() + step).cwiseMin(box.hi.array()).matrix();
    scan(lo, hi, next, visit);
    step = next;
  }
  // Grid cells can miss a minimizer on a curved boundary by more than one cell, so finish
  // with a projected compass search.
  const auto d = static_cast<Eigen::Index>(dim);
  for (double s = coarse; s >= 0.1 * fine;) {
    bool moved = false;
    for (Eigen::Index i = 0; i < d; ++i)
      for (double sign : {1.0, -1.0}) {
        Point x = best.point;
        x[i] += sign * s;
        x = W.project(x);
        const double v = h(x);
        if (v < best.total_loss) {
          best.total_loss = v;
          best.point = x;
          moved = true;
        }
      }
    if (!moved) s /= 2.0;
  }
  return best;
}

Comparator best_fixed(const LossSequence& seq, const Domain& W) {
  const std::size_t T = seq.rounds();
  const auto d = static_cast<Eigen::Index>(seq.dim());
  std::vector<RoundLoss> losses;
  losses.reserve(T);
  bool linear = true, quadratic = true;
  for (std::size_t t = 1; t <= T; ++t) {
    losses.push_back(seq.at(t));
    linear = linear && losses.back().kind() == LossKind::linear;
    quadratic = quadratic && losses.back().kind() == LossKind::quadratic;
  }
  auto total = [&](const Point& x) {
    double s = 0.0;
    for (const auto& f : losses) s += f.value(x);
    return s;
  };

  Comparator c;
  c.closed_form = true;
  if (linear) {
    Point S = Point::Zero(d);
    for (const auto& f : losses) S += f.vector();
    switch (W.kind()) {
      case DomainKind::ball: {
        const Point center = W.center().size() ? W.center() : Point::Zero(d);
        const double n = S.norm();
        c.point = n > 0.0 ? Point(center - W.radius_param() * S / n) : center;
        break;
      }
      case DomainKind::box:
        c.point = Point(d);
        for (Eigen::Index i = 0; i < d; ++i) c.point[i] = S[i] > 0.0 ? W.lo()[i] : W.hi()[i];
        break;
      case DomainKind::simplex: {
        Eigen::Index i = 0;
        S.minCoeff(&i);
        c.point = Point::Zero(d);
        c.point[i] = 1.0;
        break;
      }
      case DomainKind::l1_ball: {
        Eigen::Index i = 0;
        S.cwiseAbs().maxCoeff(&i);
        c.point = Point::Zero(d);
        if (S[i] != 0.0) c.point[i] = S[i] > 0.0 ? -W.radius_param() : W.radius_param();
        break;
      }
      case DomainKind::halfspace: throw UnsupportedError("linear losses over a halfspace are unbounded below");
    }
    c.total_loss = total(c.point);
    return c;
  }
  if (quadratic) {
    // sum_t (s_t/2)||x - c_t||^2 = (S/2)||x - cbar||^2 + const, so x* = P_W(cbar).
    double S = 0.0;
    Point weighted = Point::Zero(d);
    for (const auto& f : losses) {
      S += f.curvature();
      weighted += f.curvature() * f.vector();
    }
    c.point = S > 0.0 ? W.project(weighted / S) : W.project(Point::Zero(d));
    c.total_loss = total(c.point);
    return c;
  }
  c = grid_minimize(total, W, seq.dim());
  c.closed_form = false;
  return c;
}

std::vector<double> regret_trace(const std::vector<Point>& decisions, const LossSequence& seq,
                                 const Comparator& comparator) {
  if (decisions.size() != seq.rounds())
    throw InputError("regret needs one decision per round: " + std::to_string(decisions.size()) + " for " +
                     std::to_string(seq.rounds()));
  std::vector<double> out;
  out.reserve(decisions.size());
  double acc = 0.0;
  for (std::size_t t = 1; t <= seq.rounds(); ++t) {
    const RoundLoss f = seq.at(t);
    acc += f.value(decisions[t - 1]) - f.value(comparator.point);
    out.push_back(acc);
  }
  return out;
}

std::vector<double> regret_trace(const std::vector<Point>& decisions, const LossSequence& seq,
                                 const Domain& W) {
  return regret_trace(decisions, seq, best_fixed(seq, W));
}

std::vector<std::vector<double>> violation(const std::vector<Point>& decisions,
                                           const std::vector<Domain>& constraints) {
  std::vector<std::vector<double>> out(constraints.size());
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    out[i].reserve(decisions.size());
    double acc = 0.0;
    for (const auto& x : decisions) {
      acc += constraints[i].g(x);
      out[i].push_back(acc);
    }
  }
  return out;
}

}  // namespace smoothcvx
