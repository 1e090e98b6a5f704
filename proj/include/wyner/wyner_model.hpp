#pragma once
#include <Eigen/Dense>

namespace wyner {

// Interference-intensity calibration for a given pathloss exponent.
//
// The closed forms replace the random cross distance by the inter-BS spacing;
// that is cheap but rough (the understatement grows with beta), so the exact
// single-integral moments are carried alongside and are the default used by
// the Gaussian outage approximations and the model-baseline throughputs.
struct Calibration {
  double beta = 0.0;
  double alpha_sq_ul = 0.0;        // closed form 1 / ((beta+1) 2^beta)
  double exact_alpha_sq_ul = 0.0;  // E[U] by quadrature
  double gamma = 0.0;              // 1/gamma = E[(R/cross)^beta] = (1-3^(1-beta))/(2(beta-1))
  double alpha_sq_dl = 0.0;        // 1 / ((beta+1) gamma), exact
  double mu = 0.0;                 // E[U+V], closed form (= 2 alpha_sq_ul)
  double sigma_u_sq = 0.0;         // 2 Var[U], closed form
  double exact_mu = 0.0;           // 2 E[U] by quadrature
  double exact_sigma_u_sq = 0.0;   // 2 Var[U] by quadrature
};

enum class CalibrationMode { ClosedForm, Exact };

Calibration calibrate(double beta, double quad_tol = 1e-12);

// Fixed-intensity model SIR: 1 / (2 alpha^2); +inf when alpha is zero.
double wyner_sir(double alpha_sq);

// (1/2K) log2(1 + 1/(2 alpha^2)), bits/use/user.
double wyner_avg_throughput(double alpha_sq, int k_users);

// Pentadiagonal per-cell covariance template: diagonal 1+2a^2, first
// off-diagonals 2a, second off-diagonals a^2 (circulant when wraparound).
Eigen::MatrixXd wyner_lambda0(int n_cells, double alpha, bool wraparound = true);

// (1/N) log2 det(I + S Lambda0) on the wraparound topology, bits/use/cell.
double wyner_mcp_throughput(int n_cells, double alpha, double snr);

}  // namespace wyner
