#include <doctest.h>

#include <cmath>

#include "wyner/uplink_scp.hpp"

using namespace wyner;

namespace {

NetworkConfig cfg_beta(double beta) {
  NetworkConfig cfg;
  cfg.pathloss_exp = beta;
  cfg.exclusion_radius = 0.0;
  return cfg;
}

// 2-D midpoint-grid reference for P[U+V > cut], built from the raw distance
// ratios only.
double outage_ref(double beta, double cut, int n = 3000) {
  std::int64_t hits = 0;
  for (int i = 0; i < n; ++i) {
    const double l1 = -1.0 + 2.0 * (i + 0.5) / n;
    const double u = std::pow(std::abs(l1) / (2.0 - l1), beta);
    for (int j = 0; j < n; ++j) {
      const double l2 = -1.0 + 2.0 * (j + 0.5) / n;
      hits += (u + std::pow(std::abs(l2) / (2.0 + l2), beta) > cut) ? 1 : 0;
    }
  }
  return static_cast<double>(hits) / (static_cast<double>(n) * n);
}

}  // namespace

TEST_CASE("tdma outage: support bounds and quadrature oracle") {
  const auto thetas = std::vector<double>{0.4, 81.0, 1e9};
  const OutageCurve mc = tdma_outage_mc(cfg_beta(4.0), 50000, thetas);
  CHECK(mc.values[0] == 0.0);  // U+V <= 2 so SIR >= 1/2
  CHECK(mc.values[2] > 0.999);

  const double ref = outage_ref(4.0, 1.0 / 81.0);
  CHECK(mc.values[1] >= 0.4375);
  CHECK(std::abs(mc.values[1] - ref) < 3.0 * mc.std_err[1] + 2e-3);
}

TEST_CASE("tdma lower bound: branch values and validity") {
  const auto thetas = std::vector<double>{0.5, 1.0, 81.0};
  const OutageCurve lb = tdma_outage_lower_bound(4.0, thetas);
  CHECK(lb.values[0] == 0.0);
  CHECK(lb.values[1] == 0.0);
  CHECK(lb.values[2] == doctest::Approx(0.4375).epsilon(1e-12));

  // branch one evaluated just above the 3^beta boundary stays continuous
  const OutageCurve lb2 = tdma_outage_lower_bound(4.0, {81.0 * (1.0 + 1e-9)});
  CHECK(lb2.values[0] == doctest::Approx(0.4375).epsilon(1e-6));

  for (double beta : {2.0, 3.0, 4.0, 5.0}) {
    NetworkConfig cfg = cfg_beta(beta);
    const auto grid = log_grid(1.0, 100.0 * std::pow(3.0, beta), 50);
    const OutageCurve mc = tdma_outage_mc(cfg, 20000, grid, 4);
    const OutageCurve bound = tdma_outage_lower_bound(beta, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(bound.values[i] <= mc.values[i] + 3.0 * mc.std_err[i] + 1e-12);
    }
  }
  CHECK_THROWS(tdma_outage_lower_bound(1.0, thetas));
}

TEST_CASE("cdma gaussian approximation: half-way point and closed-form mode") {
  NetworkConfig cfg = cfg_beta(4.0);
  cfg.users_per_cell = 5;
  cfg.spreading_gain = 64;

  // closed-form calibration puts the 0.5 crossing at G/(K-1+2K*alpha^2)
  const double theta_half = 64.0 / (4.0 + 0.125);
  const OutageCurve g = cdma_outage_gaussian(cfg, {theta_half}, CalibrationMode::ClosedForm);
  CHECK(g.values[0] == doctest::Approx(0.5).epsilon(1e-10));

  const Calibration cal = calibrate(4.0);
  const double theta_exact = 64.0 / (4.0 + cfg.users_per_cell * cal.exact_mu);
  const OutageCurve ge = cdma_outage_gaussian(cfg, {theta_exact});
  CHECK(ge.values[0] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("cdma MC: K=1 reduces to TDMA with a rescaled threshold") {
  NetworkConfig cfg = cfg_beta(4.0);
  cfg.users_per_cell = 1;
  cfg.spreading_gain = 16;
  const auto thetas = log_grid(1.0, 200.0, 20);
  std::vector<double> tdma_thetas(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) tdma_thetas[i] = thetas[i] / 16.0;
  const OutageCurve cd = cdma_outage_mc(cfg, 20000, thetas);
  const OutageCurve td = tdma_outage_mc(cfg, 20000, tdma_thetas);
  CHECK(cd.values == td.values);
}

TEST_CASE("cdma MC: deterministic support bound") {
  NetworkConfig cfg = cfg_beta(4.0);
  cfg.users_per_cell = 10;
  cfg.spreading_gain = 64;
  // max interference is 2K, plus K-1 intracell
  const double theta0 = 64.0 / (9.0 + 20.0) * 0.999;
  const OutageCurve q = cdma_outage_mc(cfg, 20000, {theta0});
  CHECK(q.values[0] == 0.0);
}

TEST_CASE("cdma MC: outage-vs-K transition midpoint tracks the asymptotic SIR") {
  const double g = 64.0, theta = 3.282;
  const Calibration cal = calibrate(4.0);
  const double k_star = (g / theta + 1.0) / (1.0 + cal.exact_mu);
  double prev_q = 0.0;
  double crossing = -1.0;
  int prev_k = 0;
  for (int k = 10; k <= 30; ++k) {
    NetworkConfig cfg = cfg_beta(4.0);
    cfg.users_per_cell = k;
    cfg.spreading_gain = 64;
    cfg.seed = 10 + static_cast<std::uint64_t>(k);
    const double q = cdma_outage_mc(cfg, 30000, {theta}).values[0];
    if (prev_q < 0.5 && q >= 0.5) {
      crossing = prev_k + (0.5 - prev_q) / (q - prev_q);
      break;
    }
    prev_q = q;
    prev_k = k;
  }
  REQUIRE(crossing > 0.0);
  CHECK(std::abs(crossing - k_star) <= 1.0);
}

TEST_CASE("average throughput ordering (Jensen chain) with CI separation") {
  for (const auto& [beta, k] : {std::pair<double, int>{3.0, 10}, {4.0, 50}}) {
    NetworkConfig cfg = cfg_beta(beta);
    cfg.users_per_cell = k;
    cfg.spreading_gain = k;
    const Estimate tdma = avg_throughput_tdma(cfg, 40000, 4);
    const Estimate cdma = avg_throughput_cdma(cfg, 40000, 4);
    const double wy = wyner_avg_throughput(calibrate(beta).exact_alpha_sq_ul, k);
    CHECK(tdma.mean - cdma.mean > -3.0 * std::hypot(tdma.std_err, cdma.std_err));
    CHECK(cdma.mean - wy > -3.0 * cdma.std_err);
    CHECK((tdma.mean - wy) / tdma.std_err > 3.0);
  }
}

TEST_CASE("normalized cdma interference variance decays like 1/K") {
  std::vector<double> ks = {5, 10, 20, 50};
  std::vector<double> vars;
  for (double k : ks) {
    NetworkConfig cfg = cfg_beta(4.0);
    cfg.users_per_cell = static_cast<int>(k);
    cfg.seed = 42;
    const RandomPlan plan{cfg.seed, 30000};
    const auto stat = run_trials(plan, 4, [&](std::int64_t, Xoshiro256& rng) {
      double s = 0.0;
      for (int i = 0; i < cfg.users_per_cell; ++i) {
        const double l1 = sample_offset(1.0, 0.0, rng), l2 = sample_offset(1.0, 0.0, rng);
        s += uplink_factors_at(l1, 1.0, 4.0).u + uplink_factors_at(l2, 1.0, 4.0).v;
      }
      return s / cfg.users_per_cell;
    });
    const Estimate e = summarize(stat);
    vars.push_back(e.std_err * e.std_err * static_cast<double>(stat.size()));
  }
  // least-squares slope of log var against log K
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double x = std::log(ks[i]), y = std::log(vars[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(ks.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(slope == doctest::Approx(-1.0).epsilon(0.1));
}

TEST_CASE("gaussian approximation error is nonincreasing in K") {
  const auto grid = log_grid(1.0, 100.0, 50);
  double prev = 1e9;
  for (int k : {5, 10, 20, 50}) {
    NetworkConfig cfg = cfg_beta(4.0);
    cfg.users_per_cell = k;
    cfg.spreading_gain = 64;
    const OutageCurve mc = cdma_outage_mc(cfg, 30000, grid, 4);
    const OutageCurve ga = cdma_outage_gaussian(cfg, grid);
    double err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      err = std::max(err, std::abs(mc.values[i] - ga.values[i]));
    }
    CHECK(err <= prev + 0.01);
    prev = err;
  }
}
