#include "wyner/ofdma.hpp"

#include <cmath>
#include <numeric>

#include "wyner/geometry.hpp"
#include "wyner/numerics.hpp"

namespace wyner {

namespace {

// Sum of the factors of M users drawn without replacement from one cell of K
// freshly placed users. toward_right selects U (right-going) or V.
double side_sum(const OfdmaScenario& sc, bool toward_right, Xoshiro256& rng) {
  const auto& cfg = sc.base;
  const int k = cfg.users_per_cell, m = sc.m_interferers;
  std::vector<double> offsets(static_cast<std::size_t>(k));
  for (auto& l : offsets) l = sample_offset(cfg.cell_half_width, cfg.exclusion_radius, rng);
  // partial Fisher-Yates picks m indices without replacement
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(k - i)));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    const UplinkFactors f = uplink_factors_at(offsets[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])],
                                              cfg.cell_half_width, cfg.pathloss_exp);
    sum += toward_right ? f.u : f.v;
  }
  return sum;
}

}  // namespace

OutageCurve ofdma_outage_mc(const OfdmaScenario& sc, std::int64_t trials,
                            const std::vector<double>& thetas, int workers) {
  sc.validate();
  const RandomPlan plan{sc.base.seed, trials};
  const auto stat = run_trials(plan, workers, [&](std::int64_t, Xoshiro256& rng) {
    return side_sum(sc, true, rng) + side_sum(sc, false, rng);
  });
  std::vector<double> cuts(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) cuts[i] = sc.m_interferers / thetas[i];
  return empirical_outage(stat, thetas, cuts);
}

OutageCurve ofdma_outage_gaussian(const OfdmaScenario& sc, const std::vector<double>& thetas,
                                  CalibrationMode mode) {
  sc.validate();
  const Calibration cal = calibrate(sc.base.pathloss_exp);
  const double mu = mode == CalibrationMode::Exact ? cal.exact_mu : cal.mu;
  const double sig2 = mode == CalibrationMode::Exact ? cal.exact_sigma_u_sq : cal.sigma_u_sq;
  const double m = sc.m_interferers;
  OutageCurve c;
  c.thresholds = thetas;
  c.kind = CurveKind::GaussianApprox;
  c.values.reserve(thetas.size());
  const double sd = std::sqrt(m * sig2);
  for (double theta : thetas) {
    const double arg = m / theta - m * mu;
    c.values.push_back(sd > 0 ? qfunc(arg / sd) : (arg < 0 ? 1.0 : 0.0));
  }
  c.std_err.assign(thetas.size(), 0.0);
  return c;
}

}  // namespace wyner
