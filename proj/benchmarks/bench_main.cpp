#include <benchmark/benchmark.h>

#include "smoothcvx/core/domain.hpp"
#include "smoothcvx/core/mirror.hpp"
#include "smoothcvx/core/prox.hpp"
#include "smoothcvx/online/omp.hpp"
#include "smoothcvx/problems/linear_models.hpp"
#include "smoothcvx/problems/smoothed_hinge.hpp"
#include "smoothcvx/problems/synthetic.hpp"
#include "smoothcvx/stochastic/solvers.hpp"

using namespace smoothcvx;

namespace {

Point gaussian(Rng& rng, Eigen::Index d) {
  Point x(d);
  for (auto& v : x) v = rng.normal();
  return x;
}

void project(benchmark::State& state, const Domain& D) {
  Rng rng(1);
  const Point x = gaussian(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(D.project(x));
  state.SetComplexityN(state.range(0));
}

void BM_ProjectBall(benchmark::State& s) { project(s, Domain::ball(1.0)); }
void BM_ProjectSimplex(benchmark::State& s) { project(s, Domain::simplex()); }
void BM_ProjectL1(benchmark::State& s) { project(s, Domain::l1_ball(1.0)); }

void BM_EntropyProx(benchmark::State& state) {
  Rng rng(2);
  const auto d = state.range(0);
  const Point z = Point::Constant(d, 1.0 / static_cast<double>(d)), g = gaussian(rng, d);
  const MirrorMap entropy = MirrorMap::entropy();
  const Domain simplex = Domain::simplex();
  for (auto _ : state) benchmark::DoNotOptimize(prox_step(entropy, simplex, z, g, 0.3));
}

void BM_OmpRound(benchmark::State& state) {
  Rng rng(3);
  const auto d = state.range(0);
  Omp omp(static_cast<std::size_t>(d), Domain::ball(1.0), 1.0, 0.1);
  const RoundLoss f = RoundLoss::quadratic(gaussian(rng, d));
  for (auto _ : state) {
    omp.observe(f);
    benchmark::DoNotOptimize(omp.predict());
  }
}

void BM_EmgdEpoch(benchmark::State& state) {
  Rng rng(4);
  const LogisticProblem p(make_classification_data(500, 20, rng), 1e-2);
  SolverConfig cfg;
  cfg.T = 0;
  cfg.emgd.m = 1;
  cfg.emgd.Delta1 = 10.0;
  cfg.emgd.T = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(emgd(p, Domain::ball(1e6), cfg).solution);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_PsiTransform(benchmark::State& state) {
  double eta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_transform(eta, 100.0));
    eta = eta > 0.9 ? 0.1 : eta + 0.01;
  }
}

}  // namespace

BENCHMARK(BM_ProjectBall)->RangeMultiplier(10)->Range(10, 10000);
BENCHMARK(BM_ProjectSimplex)->RangeMultiplier(10)->Range(10, 10000)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_ProjectL1)->RangeMultiplier(10)->Range(10, 10000)->Complexity(benchmark::oNLogN);
BENCHMARK(BM_EntropyProx)->Arg(10)->Arg(1000);
BENCHMARK(BM_OmpRound)->Arg(2)->Arg(100);
BENCHMARK(BM_EmgdEpoch)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsiTransform);
BENCHMARK_MAIN();
