#pragma once
#include <Eigen/Dense>

#include "wyner/config.hpp"
#include "wyner/geometry.hpp"
#include "wyner/stats.hpp"

namespace wyner {

enum class Scheme { Tdma, Cdma };

// Conditional output covariance (divided by the noise power) for joint
// decoding across all BSs: symmetric, PSD, bandwidth 2.
struct CovSpec {
  Eigen::MatrixXd matrix;
  Scheme scheme = Scheme::Tdma;
  double snr = 0.0;  // S per user
  int users = 1;     // K
};

// One active user per cell (active[cell] indexes into the layout); the single
// user transmits with the full per-cell budget K*S.
CovSpec build_cov_tdma(const UserLayout& layout, const NetworkConfig& cfg,
                       const std::vector<int>& active);

// All K users transmit at S each; equals the average of the K aligned
// single-user matrices built with budget K*S.
CovSpec build_cov_cdma(const UserLayout& layout, const NetworkConfig& cfg);

// (1/(K N)) log2 det(cov) for one draw, bits/use/user. Near-zero eigenvalues
// are clamped at zero and counted in *clamped.
double percell_throughput(const CovSpec& cov, int* clamped = nullptr);

// Expectation over layout draws (and the TDMA schedule) with CI.
Estimate mcp_throughput_mc(const NetworkConfig& cfg, Scheme scheme, std::int64_t draws,
                           int workers = 1);

}  // namespace wyner
