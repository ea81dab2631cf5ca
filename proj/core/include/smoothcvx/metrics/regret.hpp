#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "smoothcvx/adversary/sequence.hpp"
#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/online/learner.hpp"

namespace smoothcvx {

// Decisions x_1..x_T and losses f_t(x_t) of one pass of a learner over a sequence.
struct OnlineRun {
  std::vector<Point> decisions;
  std::vector<double> losses;
  double total_loss = 0.0;
};

OnlineRun play(OnlineLearner& learner, const LossSequence& seq);

struct Comparator {
  Point point;
  double total_loss = 0.0;
  bool closed_form = false;
};

// Minimizes h over W (ball or box, d <= 3) on a grid with step `coarse`, then refines
// around the best cell by factors of 10 until the step reaches `fine`.
Comparator grid_minimize(const std::function<double(const Point&)>& h, const Domain& W, std::size_t dim,
                         double coarse = 1e-2, double fine = 1e-5);

// argmin_{x in W} sum_t f_t(x). Closed form for linear losses (ball, box, simplex, l1 ball)
// and isotropic quadratics (any domain); otherwise a grid when d <= 3.
Comparator best_fixed(const LossSequence& seq, const Domain& W);

// R_t = sum_{s <= t} f_s(x_s) - f_s(x*), with x* the comparator of the whole horizon,
// so the last entry is the regret.
std::vector<double> regret_trace(const std::vector<Point>& decisions, const LossSequence& seq,
                                 const Comparator& comparator);
std::vector<double> regret_trace(const std::vector<Point>& decisions, const LossSequence& seq,
                                 const Domain& W);

// Cumulative sum_{s <= t} g_i(x_s), one trace per constraint.
std::vector<std::vector<double>> violation(const std::vector<Point>& decisions,
                                           const std::vector<Domain>& constraints);

}  // namespace smoothcvx
