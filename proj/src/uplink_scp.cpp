#include "wyner/uplink_scp.hpp"

#include <cmath>

#include "wyner/geometry.hpp"
#include "wyner/numerics.hpp"

namespace wyner {

namespace {

// Interference statistic seen by one BS in intracell TDMA: the right-going
// factor of the left neighbor's active user plus the left-going factor of the
// right neighbor's.
double tdma_interference(const NetworkConfig& cfg, Xoshiro256& rng) {
  const double l1 = sample_offset(cfg.cell_half_width, cfg.exclusion_radius, rng);
  const double l2 = sample_offset(cfg.cell_half_width, cfg.exclusion_radius, rng);
  return uplink_factors_at(l1, cfg.cell_half_width, cfg.pathloss_exp).u +
         uplink_factors_at(l2, cfg.cell_half_width, cfg.pathloss_exp).v;
}

double cdma_interference(const NetworkConfig& cfg, Xoshiro256& rng) {
  double sum = 0.0;
  for (int k = 0; k < cfg.users_per_cell; ++k) sum += tdma_interference(cfg, rng);
  return sum;
}

}  // namespace

OutageCurve tdma_outage_mc(const NetworkConfig& cfg, std::int64_t trials,
                           const std::vector<double>& thetas, int workers) {
  cfg.validate();
  const RandomPlan plan{cfg.seed, trials};
  const auto stat = run_trials(plan, workers,
                               [&](std::int64_t, Xoshiro256& rng) { return tdma_interference(cfg, rng); });
  std::vector<double> cuts(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) cuts[i] = 1.0 / thetas[i];
  return empirical_outage(stat, thetas, cuts);
}

OutageCurve tdma_outage_lower_bound(double beta, const std::vector<double>& thetas) {
  if (!(beta >= 2.0)) throw std::invalid_argument("tdma_outage_lower_bound: beta must be >= 2");
  OutageCurve c;
  c.thresholds = thetas;
  c.kind = CurveKind::LowerBound;
  c.values.reserve(thetas.size());
  for (double theta : thetas) {
    double f;
    if (theta <= 1.0) {
      f = 1.0;
    } else {
      const double t = std::pow(theta, -1.0 / beta);
      f = theta <= std::pow(3.0, beta) ? t / (1.0 + t) + 0.5 : t / (1.0 + t) + t / (1.0 - t);
    }
    c.values.push_back(1.0 - f * f);
  }
  c.std_err.assign(thetas.size(), 0.0);
  return c;
}

OutageCurve cdma_outage_gaussian(const NetworkConfig& cfg, const std::vector<double>& thetas,
                                 CalibrationMode mode) {
  cfg.validate();
  const Calibration cal = calibrate(cfg.pathloss_exp);
  const double mu = mode == CalibrationMode::Exact ? cal.exact_mu : cal.mu;
  const double sig2 = mode == CalibrationMode::Exact ? cal.exact_sigma_u_sq : cal.sigma_u_sq;
  const double k = cfg.users_per_cell;
  const double g = cfg.spreading_gain;
  OutageCurve c;
  c.thresholds = thetas;
  c.kind = CurveKind::GaussianApprox;
  c.values.reserve(thetas.size());
  const double sd = std::sqrt(k * sig2);
  for (double theta : thetas) {
    const double arg = g / theta - (k - 1.0) - k * mu;
    c.values.push_back(sd > 0 ? qfunc(arg / sd) : (arg < 0 ? 1.0 : 0.0));
  }
  c.std_err.assign(thetas.size(), 0.0);
  return c;
}

OutageCurve cdma_outage_mc(const NetworkConfig& cfg, std::int64_t trials,
                           const std::vector<double>& thetas, int workers) {
  cfg.validate();
  const RandomPlan plan{cfg.seed, trials};
  const auto stat = run_trials(plan, workers,
                               [&](std::int64_t, Xoshiro256& rng) { return cdma_interference(cfg, rng); });
  std::vector<double> cuts(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    cuts[i] = cfg.spreading_gain / thetas[i] - (cfg.users_per_cell - 1.0);
  }
  return empirical_outage(stat, thetas, cuts);
}

Estimate avg_throughput_tdma(const NetworkConfig& cfg, std::int64_t trials, int workers) {
  cfg.validate();
  const RandomPlan plan{cfg.seed, trials};
  const auto samples = run_trials(plan, workers, [&](std::int64_t, Xoshiro256& rng) {
    return std::log2(1.0 + 1.0 / tdma_interference(cfg, rng));
  });
  Estimate e = summarize(samples);
  const double scale = 1.0 / (2.0 * cfg.users_per_cell);
  e.mean *= scale;
  e.std_err *= scale;
  e.ci95_low *= scale;
  e.ci95_high *= scale;
  return e;
}

Estimate avg_throughput_cdma(const NetworkConfig& cfg, std::int64_t trials, int workers) {
  cfg.validate();
  const RandomPlan plan{cfg.seed, trials};
  const auto samples = run_trials(plan, workers, [&](std::int64_t, Xoshiro256& rng) {
    return std::log2(1.0 + cfg.users_per_cell / cdma_interference(cfg, rng));
  });
  Estimate e = summarize(samples);
  const double scale = 1.0 / (2.0 * cfg.users_per_cell);
  e.mean *= scale;
  e.std_err *= scale;
  e.ci95_low *= scale;
  e.ci95_high *= scale;
  return e;
}

}  // namespace wyner
