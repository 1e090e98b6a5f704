#include "wyner/stats.hpp"

#include <cmath>

namespace wyner {

std::string to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::Mc: return "mc";
    case CurveKind::LowerBound: return "lower_bound";
    case CurveKind::GaussianApprox: return "gaussian_approx";
    case CurveKind::Asymptotic: return "asymptotic";
  }
  return "unknown";
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0) || !(hi > lo) || n < 2) throw std::invalid_argument("log_grid: bad range");
  std::vector<double> g(static_cast<std::size_t>(n));
  const double step = (std::log(hi) - std::log(lo)) / (n - 1);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = std::exp(std::log(lo) + step * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

Estimate summarize(const std::vector<double>& samples) {
  if (samples.empty()) throw std::invalid_argument("summarize: no samples");
  const auto n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : samples) ss += (v - mean) * (v - mean);
  const double var = samples.size() > 1 ? ss / (n - 1.0) : 0.0;
  Estimate e;
  e.mean = mean;
  e.std_err = std::sqrt(var / n);
  e.ci95_low = mean - 1.959963984540054 * e.std_err;
  e.ci95_high = mean + 1.959963984540054 * e.std_err;
  e.trials = static_cast<std::int64_t>(samples.size());
  return e;
}

OutageCurve empirical_outage(const std::vector<double>& stat, const std::vector<double>& thetas,
                             const std::vector<double>& cuts) {
  if (thetas.size() != cuts.size()) throw std::invalid_argument("empirical_outage: size mismatch");
  OutageCurve c;
  c.thresholds = thetas;
  c.kind = CurveKind::Mc;
  c.trials = static_cast<std::int64_t>(stat.size());
  const double n = static_cast<double>(stat.size());
  c.values.resize(cuts.size());
  c.std_err.resize(cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    std::int64_t k = 0;
    for (double x : stat) k += (x > cuts[i]) ? 1 : 0;
    const double p = static_cast<double>(k) / n;
    c.values[i] = p;
    c.std_err[i] = std::sqrt(p * (1.0 - p) / n);
  }
  return c;
}

}  // namespace wyner
