#include "wyner/downlink_scp.hpp"

#include <cmath>

#include "wyner/geometry.hpp"
#include "wyner/numerics.hpp"
#include "wyner/wyner_model.hpp"

namespace wyner {

namespace {

// Sum of the K adjacent-cell interference ratios toward one side.
double side_interference(const NetworkConfig& cfg, double cross_dist, int count, Xoshiro256& rng) {
  double sum = 0.0;
  for (int i = 0; i < count; ++i) {
    const double l = sample_offset(cfg.cell_half_width, cfg.exclusion_radius, rng);
    sum += downlink_factor_at(l, cross_dist, cfg.pathloss_exp);
  }
  return sum;
}

}  // namespace

DlGaussMoments dl_gauss_moments(double beta, const UserPosition& pos, int k_users,
                                double half_width) {
  const double rl = std::pow(half_width / pos.left_dist, beta);
  const double rr = std::pow(half_width / pos.right_dist, beta);
  DlGaussMoments m;
  m.mu_r = std::sqrt(static_cast<double>(k_users)) / (beta + 1.0) * (rl + rr);
  m.sigma_r_sq = beta * beta / ((beta + 1.0) * (beta + 1.0) * (2.0 * beta + 1.0)) *
                 (rl * rl + rr * rr);
  return m;
}

OutageCurve pci_tdma_outage_bound(double beta, const UserPosition& pos,
                                  const std::vector<double>& thetas, double half_width) {
  OutageCurve c;
  c.thresholds = thetas;
  c.kind = CurveKind::LowerBound;
  c.values.reserve(thetas.size());
  for (double theta : thetas) {
    const double t = std::pow(theta, -1.0 / beta);
    const double pa = std::min(t * pos.left_dist / half_width, 1.0);
    const double pb = std::min(t * pos.right_dist / half_width, 1.0);
    c.values.push_back(1.0 - pa * pb);
  }
  c.std_err.assign(thetas.size(), 0.0);
  return c;
}

OutageCurve pci_tdma_outage_mc(const NetworkConfig& cfg, const UserPosition& pos,
                               std::int64_t trials, const std::vector<double>& thetas,
                               int workers) {
  cfg.validate();
  const RandomPlan plan{cfg.seed, trials};
  const auto stat = run_trials(plan, workers, [&](std::int64_t, Xoshiro256& rng) {
    return side_interference(cfg, pos.left_dist, 1, rng) +
           side_interference(cfg, pos.right_dist, 1, rng);
  });
  std::vector<double> cuts(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) cuts[i] = 1.0 / thetas[i];
  return empirical_outage(stat, thetas, cuts);
}

OutageCurve pci_cdma_outage_gaussian(const NetworkConfig& cfg, const UserPosition& pos,
                                     const std::vector<double>& thetas) {
  cfg.validate();
  const DlGaussMoments m =
      dl_gauss_moments(cfg.pathloss_exp, pos, cfg.users_per_cell, cfg.cell_half_width);
  const double rootk = std::sqrt(static_cast<double>(cfg.users_per_cell));
  OutageCurve c;
  c.thresholds = thetas;
  c.kind = CurveKind::GaussianApprox;
  c.values.reserve(thetas.size());
  for (double theta : thetas) {
    const double arg = (cfg.spreading_gain / theta - rootk * m.mu_r) /
                       (rootk * std::sqrt(m.sigma_r_sq));
    c.values.push_back(qfunc(arg));
  }
  c.std_err.assign(thetas.size(), 0.0);
  return c;
}

OutageCurve pci_cdma_outage_mc(const NetworkConfig& cfg, const UserPosition& pos,
                               std::int64_t trials, const std::vector<double>& thetas,
                               int workers) {
  cfg.validate();
  const RandomPlan plan{cfg.seed, trials};
  const auto stat = run_trials(plan, workers, [&](std::int64_t, Xoshiro256& rng) {
    return side_interference(cfg, pos.left_dist, cfg.users_per_cell, rng) +
           side_interference(cfg, pos.right_dist, cfg.users_per_cell, rng);
  });
  std::vector<double> cuts(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) cuts[i] = cfg.spreading_gain / thetas[i];
  return empirical_outage(stat, thetas, cuts);
}

double pci_asymptotic_sir(const NetworkConfig& cfg, const UserPosition& pos) {
  cfg.validate();
  const double beta = cfg.pathloss_exp;
  const double rl = std::pow(cfg.cell_half_width / pos.left_dist, beta);
  const double rr = std::pow(cfg.cell_half_width / pos.right_dist, beta);
  // gamma * alpha_dl^2 = 1 / (beta + 1)
  return cfg.spreading_gain * (beta + 1.0) / (cfg.users_per_cell * (rl + rr));
}

Estimate pci_avg_throughput(const NetworkConfig& cfg, std::int64_t trials, Scheme scheme,
                            int workers) {
  cfg.validate();
  const RandomPlan plan{cfg.seed, trials};
  const int per_side = scheme == Scheme::Cdma ? cfg.users_per_cell : 1;
  const double k = cfg.users_per_cell;
  const auto samples = run_trials(plan, workers, [&](std::int64_t, Xoshiro256& rng) {
    const double lt = sample_offset(cfg.cell_half_width, cfg.exclusion_radius, rng);
    const UserPosition pos = UserPosition::at(lt, cfg.cell_half_width);
    const double interference = side_interference(cfg, pos.left_dist, per_side, rng) +
                                side_interference(cfg, pos.right_dist, per_side, rng);
    const double sir = scheme == Scheme::Cdma ? k / interference : 1.0 / interference;
    return std::log2(1.0 + sir);
  });
  Estimate e = summarize(samples);
  const double scale = 1.0 / (2.0 * k);
  e.mean *= scale;
  e.std_err *= scale;
  e.ci95_low *= scale;
  e.ci95_high *= scale;
  return e;
}

Estimate etp_avg_throughput(const NetworkConfig& cfg, std::int64_t trials, int workers) {
  cfg.validate();
  const RandomPlan plan{cfg.seed, trials};
  const auto samples = run_trials(plan, workers, [&](std::int64_t, Xoshiro256& rng) {
    const double l = sample_offset(cfg.cell_half_width, cfg.exclusion_radius, rng);
    const UplinkFactors f = uplink_factors_at(l, cfg.cell_half_width, cfg.pathloss_exp);
    const double denom = f.u + f.v;
    const double sir = denom > 1.0 / kEtpSirCap ? 1.0 / denom : kEtpSirCap;
    return std::log2(1.0 + sir);
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
