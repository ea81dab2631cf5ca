#pragma once

#include <cstddef>

#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/core/mirror.hpp"
#include "smoothcvx/online/learner.hpp"

namespace smoothcvx {

// Step from the gradual-variation analysis: 0.5 min(1/sqrt(2), L / sqrt(EGV)).
double omp_tuned_eta(double smoothness, double egv);

// argmin over the domain of the mirror potential: P_W(0) for the Euclidean map,
// the uniform point for entropy on the simplex.
Point mirror_center(const MirrorMap& map, const Domain& domain, std::size_t dim);

// Online mirror prox with a general mirror map. Per round, two prox steps from z_{t-1}:
//   x_t with the previous gradient grad f_{t-1}(x_{t-1}) (zero at t = 1),
//   z_t with grad f_t(x_t).
// One gradient evaluation per round.
class Omp : public OnlineLearner {
 public:
  Omp(std::size_t dim, Domain domain, double smoothness, double eta,
      MirrorMap map = MirrorMap::euclidean());

  const Point& predict() override { return x_; }
  void observe(const RoundLoss& loss) override;
  const Point& search_point() override { return z_; }
  std::string name() const override { return "omp"; }

 private:
  Domain domain_;
  MirrorMap map_;
  double step_;
  Point z_, x_, last_grad_;
};

// Simplified variant: the searching point is a mirror step from x_t,
//   grad Phi(z'_t) = grad Phi(x_t) + (eta/L)(grad f_{t-1}(x_{t-1}) - grad f_t(x_t)),
// followed by a Bregman projection onto W when project_search is set.
class SimplifiedOmp : public OnlineLearner {
 public:
  SimplifiedOmp(std::size_t dim, Domain domain, double smoothness, double eta,
                MirrorMap map = MirrorMap::euclidean(), bool project_search = true);

  const Point& predict() override { return x_; }
  void observe(const RoundLoss& loss) override;
  const Point& search_point() override { return z_; }
  std::string name() const override { return "simplified_omp"; }

 private:
  Domain domain_;
  MirrorMap map_;
  double step_;
  bool project_;
  Point z_, x_, last_grad_;
};

// Simplified OMP for f_t + lambda ||x||_1 with the Euclidean map. The decision step is the
// composite mapping, computed as soft-thresholding followed by projection onto W.
class CompositeOmp : public OnlineLearner {
 public:
  CompositeOmp(std::size_t dim, Domain domain, double smoothness, double eta, double l1);

  const Point& predict() override { return x_; }
  void observe(const RoundLoss& loss) override;
  const Point& search_point() override { return z_; }
  std::string name() const override { return "composite_omp"; }

 private:
  Domain domain_;
  double step_, l1_;
  Point z_, x_, last_grad_;
};

}  // namespace smoothcvx
