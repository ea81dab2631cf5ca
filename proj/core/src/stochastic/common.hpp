#pragma once

#include <algorithm>
#include <cmath>

#include "smoothcvx/core/errors.hpp"
#include "smoothcvx/core/oracle.hpp"
#include "smoothcvx/core/trace.hpp"
#include "smoothcvx/stochastic/config.hpp"

namespace smoothcvx::detail {

inline Point start_point(const Objective& problem, const SolverConfig& cfg) {
  const auto d = static_cast<Eigen::Index>(problem.dim());
  if (cfg.w0.size() == 0) return Point::Zero(d);
  if (cfg.w0.size() != d) throw InputError("initial point has the wrong dimension");
  return cfg.w0;
}

class Recorder {
 public:
  Recorder(const Objective& problem, const SolverConfig& cfg, std::uint64_t total)
      : problem_(problem), cfg_(cfg), total_(total) {
    stride_ = cfg.record_every ? cfg.record_every : std::max<std::uint64_t>(1, total / 100);
  }

  bool due(std::uint64_t t) const { return t == 0 || t % stride_ == 0 || t == total_; }

  TraceRecord& add(Trace& trace, std::uint64_t t, const Point& eval, const Point& iterate,
                   const OracleSet& oracle) {
    TraceRecord r;
    r.iter = t;
    r.objective = problem_.value(eval);
    if (cfg_.f_star) r.suboptimality = r.objective - *cfg_.f_star;
    r.calls_stochastic = oracle.counters().stochastic;
    r.calls_full = oracle.counters().full;
    if (cfg_.record_iterates) r.iterate = iterate;
    trace.records.push_back(std::move(r));
    return trace.records.back();
  }

 private:
  const Objective& problem_;
  const SolverConfig& cfg_;
  std::uint64_t total_;
  std::uint64_t stride_;
};

inline void finish(Trace& trace, const Point& solution, const OracleSet& oracle) {
  trace.solution = solution;
  trace.counters = oracle.counters();
}

}  // namespace smoothcvx::detail
