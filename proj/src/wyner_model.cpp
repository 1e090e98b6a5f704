#include "wyner/wyner_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wyner/numerics.hpp"

namespace wyner {

Calibration calibrate(double beta, double quad_tol) {
  if (!(beta >= 2.0)) throw std::invalid_argument("calibrate: beta must be >= 2");
  Calibration c;
  c.beta = beta;
  c.alpha_sq_ul = 1.0 / ((beta + 1.0) * std::pow(2.0, beta));
  c.sigma_u_sq = 2.0 / std::pow(2.0, 2.0 * beta) *
                 (1.0 / (2.0 * beta + 1.0) - 1.0 / ((beta + 1.0) * (beta + 1.0)));
  c.mu = 2.0 * c.alpha_sq_ul;

  // E[U^p] with U = (|l| / (2 - l))^beta, l ~ U[-1, 1]; kink at zero, so
  // integrate the halves separately.
  const auto moment = [&](double p) {
    const auto f = [&](double l) { return std::pow(std::abs(l) / (2.0 - l), beta * p); };
    return 0.5 * (quad1d(f, -1.0, 0.0, quad_tol) + quad1d(f, 0.0, 1.0, quad_tol));
  };
  const double eu = moment(1.0);
  const double eu2 = moment(2.0);
  c.exact_alpha_sq_ul = eu;
  c.exact_mu = 2.0 * eu;
  c.exact_sigma_u_sq = 2.0 * (eu2 - eu * eu);

  const double gamma_inv = (1.0 - std::pow(3.0, 1.0 - beta)) / (2.0 * (beta - 1.0));
  c.gamma = 1.0 / gamma_inv;
  c.alpha_sq_dl = gamma_inv / (beta + 1.0);
  return c;
}

double wyner_sir(double alpha_sq) {
  if (alpha_sq < 0) throw std::invalid_argument("wyner_sir: alpha_sq must be >= 0");
  if (alpha_sq == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (2.0 * alpha_sq);
}

double wyner_avg_throughput(double alpha_sq, int k_users) {
  if (k_users < 1) throw std::invalid_argument("wyner_avg_throughput: k_users must be >= 1");
  return std::log2(1.0 + wyner_sir(alpha_sq)) / (2.0 * k_users);
}

Eigen::MatrixXd wyner_lambda0(int n_cells, double alpha, bool wraparound) {
  if (n_cells < 1) throw std::invalid_argument("wyner_lambda0: n_cells must be >= 1");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_cells, n_cells);
  const double a2 = alpha * alpha;
  for (int n = 0; n < n_cells; ++n) {
    m(n, n) = 1.0 + 2.0 * a2;
    for (int d = 1; d <= 2; ++d) {
      const double val = d == 1 ? 2.0 * alpha : a2;
      const int up = n + d, dn = n - d;
      if (up < n_cells) m(n, up) = val;
      else if (wraparound && n_cells > 2 * d) m(n, up - n_cells) = val;
      if (dn >= 0) m(n, dn) = val;
      else if (wraparound && n_cells > 2 * d) m(n, dn + n_cells) = val;
    }
  }
  return m;
}

double wyner_mcp_throughput(int n_cells, double alpha, double snr) {
  if (!(snr > 0)) throw std::invalid_argument("wyner_mcp_throughput: snr must be positive");
  const Eigen::MatrixXd lam = wyner_lambda0(n_cells, alpha, true);
  const Eigen::MatrixXd m =
      Eigen::MatrixXd::Identity(n_cells, n_cells) + snr * lam;
  return logdet_psd(m) / (n_cells * M_LN2);
}

}  // namespace wyner
