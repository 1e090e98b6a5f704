#include "wyner/uplink_mcp.hpp"

#include <cmath>

#include "wyner/numerics.hpp"

namespace wyner {

namespace {

// Adds the five-band contribution of one user per cell, with per-user received
// SNR `power`. factors[m] holds the (U, V) pair of the chosen user in cell m.
void add_user_bands(Eigen::MatrixXd& m, const std::vector<UplinkFactors>& factors, double power,
                    bool wraparound) {
  const int n_cells = static_cast<int>(factors.size());
  const auto at = [&](int idx) -> const UplinkFactors* {
    if (idx >= 0 && idx < n_cells) return &factors[static_cast<std::size_t>(idx)];
    if (!wraparound) return nullptr;
    return &factors[static_cast<std::size_t>((idx % n_cells + n_cells) % n_cells)];
  };
  const auto col = [&](int idx) { return (idx % n_cells + n_cells) % n_cells; };
  for (int n = 0; n < n_cells; ++n) {
    const UplinkFactors* self = at(n);
    const UplinkFactors* lm = at(n - 1);
    const UplinkFactors* lp = at(n + 1);
    m(n, n) += power * (1.0 + (lm ? lm->u : 0.0) + (lp ? lp->v : 0.0));
    if (lp || n + 1 < n_cells) {
      m(n, col(n + 1)) += power * (std::sqrt(self->u) + (lp ? std::sqrt(lp->v) : 0.0));
    }
    if (lm || n - 1 >= 0) {
      m(n, col(n - 1)) += power * ((lm ? std::sqrt(lm->u) : 0.0) + std::sqrt(self->v));
    }
    if (lp && (wraparound ? n_cells > 4 : n + 2 < n_cells)) {
      m(n, col(n + 2)) += power * std::sqrt(lp->u * lp->v);
    }
    if (lm && (wraparound ? n_cells > 4 : n - 2 >= 0)) {
      m(n, col(n - 2)) += power * std::sqrt(lm->u * lm->v);
    }
  }
}

std::vector<UplinkFactors> user_factors(const UserLayout& layout, const NetworkConfig& cfg,
                                        int user) {
  std::vector<UplinkFactors> f(static_cast<std::size_t>(layout.n_cells));
  for (int n = 0; n < layout.n_cells; ++n) {
    f[static_cast<std::size_t>(n)] = uplink_factors(layout, n, user, cfg.pathloss_exp);
  }
  return f;
}

}  // namespace

CovSpec build_cov_tdma(const UserLayout& layout, const NetworkConfig& cfg,
                       const std::vector<int>& active) {
  cfg.validate();
  if (static_cast<int>(active.size()) != layout.n_cells) {
    throw std::invalid_argument("build_cov_tdma: need one active user per cell");
  }
  std::vector<UplinkFactors> f(static_cast<std::size_t>(layout.n_cells));
  for (int n = 0; n < layout.n_cells; ++n) {
    f[static_cast<std::size_t>(n)] =
        uplink_factors(layout, n, active[static_cast<std::size_t>(n)], cfg.pathloss_exp);
  }
  CovSpec cov;
  cov.matrix = Eigen::MatrixXd::Identity(layout.n_cells, layout.n_cells);
  add_user_bands(cov.matrix, f, cfg.users_per_cell * cfg.snr, layout.wraparound);
  cov.scheme = Scheme::Tdma;
  cov.snr = cfg.snr;
  cov.users = cfg.users_per_cell;
  return cov;
}

CovSpec build_cov_cdma(const UserLayout& layout, const NetworkConfig& cfg) {
  cfg.validate();
  CovSpec cov;
  cov.matrix = Eigen::MatrixXd::Identity(layout.n_cells, layout.n_cells);
  for (int k = 0; k < layout.users_per_cell; ++k) {
    add_user_bands(cov.matrix, user_factors(layout, cfg, k), cfg.snr, layout.wraparound);
  }
  cov.scheme = Scheme::Cdma;
  cov.snr = cfg.snr;
  cov.users = cfg.users_per_cell;
  return cov;
}

double percell_throughput(const CovSpec& cov, int* clamped) {
  const auto n = cov.matrix.rows();
  return logdet_psd(cov.matrix, LogDetMethod::Auto, clamped) /
         (static_cast<double>(cov.users) * static_cast<double>(n) * M_LN2);
}

Estimate mcp_throughput_mc(const NetworkConfig& cfg, Scheme scheme, std::int64_t draws,
                           int workers) {
  cfg.validate();
  const RandomPlan plan{cfg.seed, draws};
  const auto samples = run_trials(plan, workers, [&](std::int64_t, Xoshiro256& rng) {
    const UserLayout layout = sample_layout(cfg, rng);
    if (scheme == Scheme::Cdma) return percell_throughput(build_cov_cdma(layout, cfg));
    std::vector<int> active(static_cast<std::size_t>(cfg.n_cells));
    for (auto& a : active) a = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.users_per_cell)));
    return percell_throughput(build_cov_tdma(layout, cfg, active));
  });
  return summarize(samples);
}

}  // namespace wyner
