#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/online/learner.hpp"

namespace smoothcvx {

enum class SoftVariant {
  standard,      // gradient descent-ascent on f + sum lambda_i g_i - (delta eta / 2) ||lambda||^2
  no_violation,  // same on g_i + gamma with gamma = b T^{-1/4}
  penalty,       // plain OGD on f + delta sum [g_i]_+
};

// G bounds the gradients of f_t and g_i on the ball, D bounds |g_i|, F bounds f_t(x) - f_t(y).
struct SoftConstants {
  double G = 0.0;
  double D = 0.0;
  double F = 0.0;
  double R = 1.0;
};

// Estimates G, D and F from 1000 seeded points of the ball of radius R and the given losses.
SoftConstants estimate_soft_constants(const std::vector<RoundLoss>& losses,
                                      const std::vector<Domain>& constraints, double R,
                                      std::size_t dim, std::uint64_t seed);

struct SoftParams {
  SoftVariant variant = SoftVariant::standard;
  SoftConstants constants;
  std::size_t horizon = 1;
  // Overrides; zero means "derive from the constants".
  double eta = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
  Point x1;  // default 0
};

// Tuned values for the standard variant: a = R sqrt((m+1)G^2 + 2mD^2), eta = R^2/(a sqrt T),
// delta = 2(m+1)G^2.
struct SoftTuning {
  double a = 0.0, eta = 0.0, delta = 0.0, gamma = 0.0, b = 0.0;
};
SoftTuning soft_tuning(const SoftConstants& c, std::size_t m, std::size_t T, SoftVariant variant);

// Bound on sum_t g_i(x_t) for the standard variant:
// sqrt(2 (F T + a sqrt T) sqrt T (delta R^2 / a + m a / R^2)).
double soft_violation_bound(const SoftConstants& c, std::size_t m, std::size_t T);

// Online gradient descent with long-term constraints g_i(x) <= 0 (given as domains).
// The primal iterate only stays in the ball ||x|| <= R; the multipliers stay non-negative.
class SoftOgd : public OnlineLearner {
 public:
  SoftOgd(std::size_t dim, std::vector<Domain> constraints, SoftParams params);

  const Point& predict() override { return x_; }
  void observe(const RoundLoss& loss) override;
  std::string name() const override;

  const Point& multipliers() const { return lambda_; }
  const SoftTuning& tuning() const { return tuning_; }

 private:
  std::vector<Domain> g_;
  SoftVariant variant_;
  double R_;
  SoftTuning tuning_;
  Point x_, lambda_;
};

}  // namespace smoothcvx
