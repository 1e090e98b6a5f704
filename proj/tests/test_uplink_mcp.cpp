#include <doctest.h>

#include <cmath>

#include "wyner/numerics.hpp"
#include "wyner/uplink_mcp.hpp"

using namespace wyner;

namespace {

NetworkConfig mcp_cfg(int cells, int users, double snr = 10.0) {
  NetworkConfig cfg;
  cfg.n_cells = cells;
  cfg.users_per_cell = users;
  cfg.snr = snr;
  cfg.exclusion_radius = 0.0;
  return cfg;
}

UserLayout fixed_layout(const NetworkConfig& cfg, double offset) {
  UserLayout layout;
  layout.n_cells = cfg.n_cells;
  layout.users_per_cell = cfg.users_per_cell;
  layout.half_width = cfg.cell_half_width;
  layout.exclusion_radius = cfg.exclusion_radius;
  layout.wraparound = cfg.wraparound;
  layout.offsets.assign(
      static_cast<std::size_t>(cfg.n_cells) * static_cast<std::size_t>(cfg.users_per_cell), offset);
  return layout;
}

}  // namespace

TEST_CASE("K=1 makes the two covariance matrices identical") {
  NetworkConfig cfg = mcp_cfg(8, 1);
  Xoshiro256 rng(4);
  const UserLayout layout = sample_layout(cfg, rng);
  const CovSpec cd = build_cov_cdma(layout, cfg);
  const CovSpec td = build_cov_tdma(layout, cfg, std::vector<int>(8, 0));
  CHECK((cd.matrix - td.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("vanishing SNR collapses the covariance to the identity") {
  NetworkConfig cfg = mcp_cfg(8, 3, 1e-14);
  Xoshiro256 rng(5);
  const UserLayout layout = sample_layout(cfg, rng);
  const CovSpec cd = build_cov_cdma(layout, cfg);
  CHECK((cd.matrix - Eigen::MatrixXd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("cdma covariance equals the average of aligned single-user matrices") {
  NetworkConfig cfg = mcp_cfg(16, 4);
  Xoshiro256 rng(6);
  const UserLayout layout = sample_layout(cfg, rng);
  const CovSpec cd = build_cov_cdma(layout, cfg);
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(16, 16);
  for (int k = 0; k < 4; ++k) {
    avg += build_cov_tdma(layout, cfg, std::vector<int>(16, k)).matrix;
  }
  avg /= 4.0;
  CHECK((avg - cd.matrix).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("covariance matrices are symmetric PSD with bandwidth 2") {
  NetworkConfig cfg = mcp_cfg(12, 3);
  Xoshiro256 rng(7);
  const UserLayout layout = sample_layout(cfg, rng);
  for (const CovSpec& cov :
       {build_cov_cdma(layout, cfg), build_cov_tdma(layout, cfg, std::vector<int>(12, 1))}) {
    CHECK((cov.matrix - cov.matrix.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov.matrix, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() >= 1.0 - 1e-9);  // I + S M M^T
    for (int i = 0; i < 12; ++i) {
      for (int j = 0; j < 12; ++j) {
        const int d = std::min((i - j + 12) % 12, (j - i + 12) % 12);
        if (d > 2) CHECK(cov.matrix(i, j) == 0.0);
      }
    }
    // diagonal follows the banded template
    const UplinkFactors lm = uplink_factors(layout, 11, cov.scheme == Scheme::Cdma ? 0 : 1, 4.0);
    (void)lm;
  }
}

TEST_CASE("tdma diagonal matches the template") {
  NetworkConfig cfg = mcp_cfg(8, 5);
  Xoshiro256 rng(8);
  const UserLayout layout = sample_layout(cfg, rng);
  const std::vector<int> active(8, 2);
  const CovSpec td = build_cov_tdma(layout, cfg, active);
  const double ks = cfg.users_per_cell * cfg.snr;
  for (int n = 0; n < 8; ++n) {
    const double u_left = uplink_factors(layout, (n + 7) % 8, 2, cfg.pathloss_exp).u;
    const double v_right = uplink_factors(layout, (n + 1) % 8, 2, cfg.pathloss_exp).v;
    CHECK(td.matrix(n, n) ==
          doctest::Approx(1.0 + ks * (1.0 + u_left + v_right)).epsilon(1e-12));
  }
}

TEST_CASE("percell throughput: identity and single-cell closed form") {
  CovSpec eye;
  eye.matrix = Eigen::MatrixXd::Identity(5, 5);
  eye.users = 3;
  CHECK(percell_throughput(eye) == doctest::Approx(0.0).epsilon(1e-12));

  NetworkConfig cfg = mcp_cfg(1, 4, 7.0);
  cfg.wraparound = false;
  Xoshiro256 rng(9);
  const UserLayout layout = sample_layout(cfg, rng);
  const CovSpec td = build_cov_tdma(layout, cfg, {0});
  CHECK(percell_throughput(td) ==
        doctest::Approx(std::log2(1.0 + 4.0 * 7.0) / 4.0).epsilon(1e-12));
}

TEST_CASE("joint decoding: cdma beats tdma on average") {
  NetworkConfig cfg = mcp_cfg(32, 4);
  NetworkConfig tdma_cfg = cfg;
  tdma_cfg.seed = 2;
  const Estimate cd = mcp_throughput_mc(cfg, Scheme::Cdma, 60, 4);
  const Estimate td = mcp_throughput_mc(tdma_cfg, Scheme::Tdma, 60, 4);
  CHECK(cd.mean - td.mean > -3.0 * std::hypot(cd.std_err, td.std_err));
}

TEST_CASE("log det concavity on sampled PSD pairs") {
  NetworkConfig cfg = mcp_cfg(16, 2);
  Xoshiro256 rng(10);
  for (int rep = 0; rep < 5; ++rep) {
    const UserLayout la = sample_layout(cfg, rng);
    const UserLayout lb = sample_layout(cfg, rng);
    const Eigen::MatrixXd a = build_cov_cdma(la, cfg).matrix;
    const Eigen::MatrixXd b = build_cov_cdma(lb, cfg).matrix;
    const double mid = logdet_psd(0.5 * (a + b));
    CHECK(mid >= 0.5 * (logdet_psd(a) + logdet_psd(b)) - 1e-9);
  }
}

TEST_CASE("limit surrogate is stable between N=64 and N=128") {
  NetworkConfig a = mcp_cfg(64, 2);
  NetworkConfig b = mcp_cfg(128, 2);
  const Estimate ea = mcp_throughput_mc(a, Scheme::Cdma, 400, 4);
  const Estimate eb = mcp_throughput_mc(b, Scheme::Cdma, 400, 4);
  CHECK(std::abs(ea.mean - eb.mean) / eb.mean < 0.01);
}

TEST_CASE("fixed uniform layout: cdma equals tdma exactly") {
  NetworkConfig cfg = mcp_cfg(16, 8);
  const UserLayout layout = fixed_layout(cfg, 0.6);
  const double cd = percell_throughput(build_cov_cdma(layout, cfg));
  const double td = percell_throughput(build_cov_tdma(layout, cfg, std::vector<int>(16, 3)));
  CHECK(std::abs(cd - td) < 1e-9);
}
