#pragma once
#include "wyner/config.hpp"
#include "wyner/stats.hpp"
#include "wyner/wyner_model.hpp"

namespace wyner {

// Uplink, single-cell processing. Interference-limited: noise is ignored and
// everything is driven by the two adjacent-cell factors U and V.

// Empirical P[U + V > 1/theta]; one uniformly placed interferer per
// neighboring cell per trial.
OutageCurve tdma_outage_mc(const NetworkConfig& cfg, std::int64_t trials,
                           const std::vector<double>& thetas, int workers = 1);

// Closed-form lower bound 1 - F(theta)^2 with F the three-branch CDF of
// P[U <= 1/theta].
OutageCurve tdma_outage_lower_bound(double beta, const std::vector<double>& thetas);

// Q-function approximation of P[sum_k (U_k + V_k) > G/theta - (K-1)].
OutageCurve cdma_outage_gaussian(const NetworkConfig& cfg, const std::vector<double>& thetas,
                                 CalibrationMode mode = CalibrationMode::Exact);

OutageCurve cdma_outage_mc(const NetworkConfig& cfg, std::int64_t trials,
                           const std::vector<double>& thetas, int workers = 1);

// (1/2K) E[log2(1 + 1/(U+V))], one active interferer per neighbor cell.
Estimate avg_throughput_tdma(const NetworkConfig& cfg, std::int64_t trials, int workers = 1);

// (1/2K) E[log2(1 + 1/((1/K) sum_k (U_k+V_k)))]; G=K with intracell
// interference suppressed by the multiuser detector.
Estimate avg_throughput_cdma(const NetworkConfig& cfg, std::int64_t trials, int workers = 1);

}  // namespace wyner
