#pragma once
#include "wyner/config.hpp"
#include "wyner/stats.hpp"
#include "wyner/uplink_mcp.hpp"

namespace wyner {

// Location of the tagged downlink user inside its cell.
struct UserPosition {
  double offset = 0.0;      // L in [-R, R]
  double left_dist = 2.0;   // 2R + L
  double right_dist = 2.0;  // 2R - L

  static UserPosition at(double offset, double half_width) {
    return {offset, 2.0 * half_width + offset, 2.0 * half_width - offset};
  }
};

// Per-location Gaussian moments of the normalized aggregate interference
// (1/sqrt(K)) (sum A + sum B); exact since |L| is uniform.
struct DlGaussMoments {
  double mu_r = 0.0;
  double sigma_r_sq = 0.0;
};

DlGaussMoments dl_gauss_moments(double beta, const UserPosition& pos, int k_users,
                                double half_width = 1.0);

// Channel inversion, intracell TDMA: closed-form lower bound
// q >= 1 - P[A <= 1/theta] P[B <= 1/theta].
OutageCurve pci_tdma_outage_bound(double beta, const UserPosition& pos,
                                  const std::vector<double>& thetas, double half_width = 1.0);

OutageCurve pci_tdma_outage_mc(const NetworkConfig& cfg, const UserPosition& pos,
                               std::int64_t trials, const std::vector<double>& thetas,
                               int workers = 1);

// Channel inversion, synchronous CDMA: Q-function approximation of
// P[sum A + sum B > G/theta] at a fixed user location.
OutageCurve pci_cdma_outage_gaussian(const NetworkConfig& cfg, const UserPosition& pos,
                                     const std::vector<double>& thetas);

OutageCurve pci_cdma_outage_mc(const NetworkConfig& cfg, const UserPosition& pos,
                               std::int64_t trials, const std::vector<double>& thetas,
                               int workers = 1);

// Deterministic large-K SIR at a fixed location.
double pci_asymptotic_sir(const NetworkConfig& cfg, const UserPosition& pos);

// Average throughput over random target and interferer locations, bits/use/user.
Estimate pci_avg_throughput(const NetworkConfig& cfg, std::int64_t trials, Scheme scheme,
                            int workers = 1);

// Equal transmit power: SIR depends only on the user's own position; TDMA and
// CDMA (G=K) coincide. Rates are capped at log2(1 + kEtpSirCap) so a user
// arbitrarily close to its BS cannot blow up the estimate; with a positive
// exclusion radius the cap never binds.
inline constexpr double kEtpSirCap = 1e6;

Estimate etp_avg_throughput(const NetworkConfig& cfg, std::int64_t trials, int workers = 1);

}  // namespace wyner
