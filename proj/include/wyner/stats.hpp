#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wyner/random.hpp"

namespace wyner {

struct Estimate {
  double mean = 0.0;
  double std_err = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  std::int64_t trials = 0;
};

enum class CurveKind { Mc, LowerBound, GaussianApprox, Asymptotic };

std::string to_string(CurveKind kind);

struct OutageCurve {
  std::vector<double> thresholds;  // linear SIR thresholds
  std::vector<double> values;      // outage probabilities in [0, 1]
  std::vector<double> std_err;     // zero for analytic curves
  CurveKind kind = CurveKind::Mc;
  std::int64_t trials = 0;
};

// Logarithmic grid of n points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);

// Runs per_trial(i, rng_i) for i in [0, plan.trial_count), filling a vector in
// trial order. Substreams make the result independent of the worker count.
template <class F>
std::vector<double> run_trials(const RandomPlan& plan, int workers, F&& per_trial) {
  if (plan.trial_count <= 0) throw std::invalid_argument("run_trials: trial count must be positive");
  std::vector<double> out(static_cast<std::size_t>(plan.trial_count));
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers <= 1 || plan.trial_count < 2 * workers) {
    for (std::int64_t i = 0; i < plan.trial_count; ++i) {
      Xoshiro256 rng = plan.stream(i);
      out[static_cast<std::size_t>(i)] = per_trial(i, rng);
    }
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::int64_t chunk = (plan.trial_count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min(plan.trial_count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      for (std::int64_t i = lo; i < hi; ++i) {
        Xoshiro256 rng = plan.stream(i);
        out[static_cast<std::size_t>(i)] = per_trial(i, rng);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

// Sample mean with standard error and normal 95% CI, reduced in trial order.
Estimate summarize(const std::vector<double>& samples);

template <class F>
Estimate mc_estimate(const RandomPlan& plan, int workers, F&& per_trial) {
  return summarize(run_trials(plan, workers, per_trial));
}

// Empirical exceedance curve: values[i] = P[stat > cuts[i]] with binomial
// standard errors. cuts must correspond 1:1 to the thresholds reported.
OutageCurve empirical_outage(const std::vector<double>& stat, const std::vector<double>& thetas,
                             const std::vector<double>& cuts);

}  // namespace wyner
