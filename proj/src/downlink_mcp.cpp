#include "wyner/downlink_mcp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wyner/numerics.hpp"

namespace wyner {

namespace {

void require_exclusion(const NetworkConfig& cfg, const char* who) {
  if (!(cfg.exclusion_radius > 0.0)) {
    throw ConfigError(std::string(who) + ": exclusion_radius must be positive "
                      "(the home-gain second moment diverges otherwise)");
  }
}

// Offsets are uniform on [-R,-eps] u [eps,R]; averages over that set reduce to
// integrals over the two halves.
double excluded_mean(const std::function<double(double)>& f, double eps, double r,
                     double quad_tol) {
  const double mass = 2.0 * (r - eps);
  return (quad1d(f, -r, -eps, quad_tol) + quad1d(f, eps, r, quad_tol)) / mass;
}

}  // namespace

double gain_normalization(double beta, double exclusion_radius, double half_width) {
  if (!(exclusion_radius > 0.0)) {
    throw ConfigError("gain_normalization: exclusion_radius must be positive");
  }
  const double second_moment = excluded_mean(
      [beta](double l) { return std::pow(std::abs(l), -beta); }, exclusion_radius, half_width,
      1e-12);
  return 1.0 / std::sqrt(second_moment);
}

ChannelMatrix build_channel(const UserLayout& layout, const NetworkConfig& cfg) {
  cfg.validate();
  require_exclusion(cfg, "build_channel");
  const int n = layout.n_cells, k = layout.users_per_cell;
  ChannelMatrix ch;
  ch.n_cells = n;
  ch.users_per_cell = k;
  ch.normalization = gain_normalization(cfg.pathloss_exp, layout.exclusion_radius,
                                        layout.half_width);
  ch.h_t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n) * k, n);
  for (int cell = 0; cell < n; ++cell) {
    const int left = layout.wraparound ? (cell + n - 1) % n : cell - 1;
    const int right = layout.wraparound ? (cell + 1) % n : cell + 1;
    for (int u = 0; u < k; ++u) {
      const DownlinkGains g = downlink_gains(layout, cell, u, 1.0, cfg.pathloss_exp);
      const Eigen::Index row = static_cast<Eigen::Index>(cell) * k + u;
      ch.h_t(row, cell) = ch.normalization * g.home;
      if (left >= 0) ch.h_t(row, left) = ch.normalization * g.left;
      if (right < n) ch.h_t(row, right) = ch.normalization * g.right;
    }
  }
  return ch;
}

LimitMatrix limit_matrix(const NetworkConfig& cfg, double quad_tol) {
  cfg.validate();
  require_exclusion(cfg, "limit_matrix");
  const double beta = cfg.pathloss_exp;
  const double r = cfg.cell_half_width, eps = cfg.exclusion_radius;
  const double c = gain_normalization(beta, eps, r);
  const double c2 = c * c;
  const auto a2 = [&](double l) { return c2 * std::pow(std::abs(l), -beta); };
  const auto u = [&](double l) { return std::pow(std::abs(l) / (2.0 * r - l), beta); };
  const auto v = [&](double l) { return std::pow(std::abs(l) / (2.0 * r + l), beta); };

  LimitMatrix lm;
  lm.diag = excluded_mean([&](double l) { return a2(l) * (1.0 + u(l) + v(l)); }, eps, r, quad_tol);
  lm.off1 = excluded_mean([&](double l) { return a2(l) * std::sqrt(u(l)); }, eps, r, quad_tol) +
            excluded_mean([&](double l) { return a2(l) * std::sqrt(v(l)); }, eps, r, quad_tol);
  lm.off2 = excluded_mean([&](double l) { return a2(l) * std::sqrt(u(l) * v(l)); }, eps, r,
                          quad_tol);

  const int n = cfg.n_cells;
  lm.matrix = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    lm.matrix(i, i) = lm.diag;
    lm.matrix(i, (i + 1) % n) = lm.off1;
    lm.matrix(i, (i + n - 1) % n) = lm.off1;
    if (n > 4) {
      lm.matrix(i, (i + 2) % n) = lm.off2;
      lm.matrix(i, (i + n - 2) % n) = lm.off2;
    }
  }
  return lm;
}

namespace {

// Euclidean projection onto {a_i >= lo, sum a_i = budget}.
Eigen::VectorXd project_simplex(const Eigen::VectorXd& v, double budget, double lo) {
  const Eigen::Index n = v.size();
  std::vector<double> w(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = v[i] - lo;
  const double cc = budget - static_cast<double>(n) * lo;
  std::vector<double> u = w;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumsum = 0.0, tau = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumsum += u[j];
    const double cand = (cumsum - cc) / static_cast<double>(j + 1);
    if (u[j] - cand > 0) tau = cand;
  }
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out[i] = std::max(w[static_cast<std::size_t>(i)] - tau, 0.0) + lo;
  }
  return out;
}

double objective_nat(const Eigen::MatrixXd& gram, const Eigen::VectorXd& a) {
  Eigen::MatrixXd m = gram;
  m.diagonal() += a;
  return logdet_psd(m, LogDetMethod::Cholesky) - a.array().log().sum();
}

}  // namespace

MinimaxResult minimax_diag_noise(const Eigen::MatrixXd& gram, double snr, double tol,
                                 int max_iter) {
  if (gram.rows() != gram.cols()) throw NumericsError("minimax_diag_noise: gram not square");
  const double scale = std::max(gram.cwiseAbs().maxCoeff(), 1e-300);
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw NumericsError("minimax_diag_noise: gram not symmetric");
  }
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10 * scale) {
      throw NumericsError("minimax_diag_noise: gram not PSD");
    }
  }
  if (!(snr > 0)) throw NumericsError("minimax_diag_noise: snr must be positive");

  const Eigen::Index n = gram.rows();
  const double budget = 1.0 / snr;
  const double lo = 1e-12 * budget / static_cast<double>(n);

  Eigen::VectorXd a = Eigen::VectorXd::Constant(n, budget / static_cast<double>(n));
  double fa = objective_nat(gram, a);
  double step = 1.0;
  MinimaxResult res;
  res.converged = false;

  int it = 0;
  for (; it < max_iter; ++it) {
    Eigen::MatrixXd m = gram;
    m.diagonal() += a;
    const Eigen::VectorXd grad =
        m.inverse().diagonal() - a.array().inverse().matrix();
    const double residual =
        (a - project_simplex(a - grad, budget, lo)).cwiseAbs().maxCoeff();
    res.residual = residual;
    if (residual <= tol * std::max(1.0, grad.cwiseAbs().maxCoeff())) {
      res.converged = true;
      break;
    }
    step = std::min(step * 2.0, 1e6);
    for (;;) {
      const Eigen::VectorXd cand = project_simplex(a - step * grad, budget, lo);
      const double fc = objective_nat(gram, cand);
      if (fc <= fa + 1e-4 * grad.dot(cand - a) || step < 1e-18) {
        a = cand;
        fa = fc;
        break;
      }
      step *= 0.5;
    }
  }
  res.iterations = it;
  res.value_bits = fa / M_LN2;
  res.noise_diag = a;
  return res;
}

namespace {

double cdma_draw_value(const NetworkConfig& cfg, Xoshiro256& rng) {
  const UserLayout layout = sample_layout(cfg, rng);
  const ChannelMatrix ch = build_channel(layout, cfg);
  const double kn = static_cast<double>(cfg.users_per_cell) * cfg.n_cells;
  const Eigen::MatrixXd gram = ch.h_t.transpose() * ch.h_t / kn;
  return minimax_diag_noise(gram, cfg.snr).value_bits / cfg.n_cells;
}

double tdma_draw_value(const NetworkConfig& cfg, Xoshiro256& rng) {
  const UserLayout layout = sample_layout(cfg, rng);
  const ChannelMatrix ch = build_channel(layout, cfg);
  const int n = cfg.n_cells, k = cfg.users_per_cell;
  double sum = 0.0;
  for (int u = 0; u < k; ++u) {
    Eigen::MatrixXd h(n, n);
    for (int cell = 0; cell < n; ++cell) {
      h.row(cell) = ch.h_t.row(static_cast<Eigen::Index>(cell) * k + u);
    }
    const Eigen::MatrixXd gram = h.transpose() * h / cfg.n_cells;
    sum += minimax_diag_noise(gram, cfg.snr).value_bits / cfg.n_cells;
  }
  return sum / k;
}

}  // namespace

Estimate sumthroughput_lower_cdma(const NetworkConfig& cfg, std::int64_t draws, int workers) {
  cfg.validate();
  require_exclusion(cfg, "sumthroughput_lower_cdma");
  const RandomPlan plan{cfg.seed, draws};
  return summarize(run_trials(plan, workers, [&](std::int64_t, Xoshiro256& rng) {
    return cdma_draw_value(cfg, rng);
  }));
}

Estimate sumthroughput_lower_tdma(const NetworkConfig& cfg, std::int64_t draws, int workers) {
  cfg.validate();
  require_exclusion(cfg, "sumthroughput_lower_tdma");
  const RandomPlan plan{cfg.seed, draws};
  return summarize(run_trials(plan, workers, [&](std::int64_t, Xoshiro256& rng) {
    return tdma_draw_value(cfg, rng);
  }));
}

double sumthroughput_limit_cdma(const NetworkConfig& cfg) {
  cfg.validate();
  require_exclusion(cfg, "sumthroughput_limit_cdma");
  const LimitMatrix lm = limit_matrix(cfg);
  const Eigen::MatrixXd m =
      Eigen::MatrixXd::Identity(cfg.n_cells, cfg.n_cells) + cfg.snr * lm.matrix;
  return logdet_psd(m) / (cfg.n_cells * M_LN2);
}

}  // namespace wyner
