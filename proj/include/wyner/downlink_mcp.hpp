#pragma once
#include <Eigen/Dense>

#include "wyner/config.hpp"
#include "wyner/geometry.hpp"
#include "wyner/stats.hpp"
#include "wyner/uplink_mcp.hpp"

namespace wyner {

// Location-dependent downlink channel for one draw: one row per user with the
// amplitude gains toward its home, left and right BS, scaled so the home gain
// has unit second moment in expectation.
struct ChannelMatrix {
  Eigen::MatrixXd h_t;  // NK x N, row per user (cell-major)
  double normalization = 1.0;
  int n_cells = 0;
  int users_per_cell = 0;
};

// c with E[(c * gain_home)^2] = 1 under the exclusion-radius layout; the
// reference distance folds into c and is fixed at 1 here.
double gain_normalization(double beta, double exclusion_radius, double half_width = 1.0);

ChannelMatrix build_channel(const UserLayout& layout, const NetworkConfig& cfg);

// Deterministic large-K limit of (1/K) H H^T: symmetric pentadiagonal with
// three distinct entries, each a 1-D expectation over the user offset.
struct LimitMatrix {
  Eigen::MatrixXd matrix;
  double diag = 0.0;
  double off1 = 0.0;
  double off2 = 0.0;
};

LimitMatrix limit_matrix(const NetworkConfig& cfg, double quad_tol = 1e-12);

struct MinimaxResult {
  double value_bits = 0.0;      // log2 det(gram + A) - log2 det(A) at the minimizer
  Eigen::VectorXd noise_diag;   // diagonal of A, Tr(A) = 1/S
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

// Minimizes log det(gram + A) - log det(A) over diagonal A >= 0 with
// Tr(A) <= 1/S (active at the optimum) by projected gradient descent with
// backtracking. gram must be symmetric PSD.
MinimaxResult minimax_diag_noise(const Eigen::MatrixXd& gram, double snr, double tol = 1e-8,
                                 int max_iter = 10000);

// Equal-power lower bounds to the per-cell sum throughput, bits/use/cell.
Estimate sumthroughput_lower_cdma(const NetworkConfig& cfg, std::int64_t draws, int workers = 1);

// Intracell TDMA bound; per draw the minimax value is averaged over the K
// aligned single-user schedules, which also makes the per-draw CDMA >= TDMA
// comparison exact.
Estimate sumthroughput_lower_tdma(const NetworkConfig& cfg, std::int64_t draws, int workers = 1);

// Large-K limit (1/N) log2 det(I + S limit_matrix), bits/use/cell.
double sumthroughput_limit_cdma(const NetworkConfig& cfg);

}  // namespace wyner
