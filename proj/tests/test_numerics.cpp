#include <doctest.h>

#include <cmath>

#include "wyner/numerics.hpp"
#include "wyner/stats.hpp"

using namespace wyner;

TEST_CASE("qfunc basic values") {
  CHECK(qfunc(0.0) == doctest::Approx(0.5).epsilon(1e-12));
  for (double x : {-3.0, -0.7, 0.3, 1.5, 4.0}) {
    CHECK(qfunc(x) + qfunc(-x) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("qfunc matches a numerically inverted normal quantile") {
  // Independent oracle: integrate the standard normal density with the
  // trapezoid rule and bisect for the 0.025 upper quantile.
  const auto ccdf = [](double x) {
    const int n = 200000;
    const double hi = x + 12.0;
    const double h = (hi - x) / n;
    double s = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double t = x + h * i;
      const double w = (i == 0 || i == n) ? 0.5 : 1.0;
      s += w * std::exp(-0.5 * t * t);
    }
    return s * h / std::sqrt(2.0 * M_PI);
  };
  double lo = 1.0, hi = 3.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (ccdf(mid) > 0.025 ? lo : hi) = mid;
  }
  const double quantile = 0.5 * (lo + hi);
  CHECK(quantile == doctest::Approx(1.959964).epsilon(1e-5));
  CHECK(qfunc(quantile) == doctest::Approx(0.025).epsilon(1e-6));
  CHECK(std::abs(qfunc(1.959964) - 0.025) < 1e-6);
}

TEST_CASE("logdet_psd") {
  CHECK(logdet_psd(Eigen::MatrixXd::Identity(7, 7)) == doctest::Approx(0.0).epsilon(1e-14));

  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 3.0;
  CHECK(logdet_psd(d) == doctest::Approx(std::log(6.0)).epsilon(1e-14));

  // eigen vs factorization route on c*I + M
  Xoshiro256 rng(42);
  Eigen::MatrixXd x(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) x(i, j) = rng.uniform(-1, 1);
  const Eigen::MatrixXd m = 0.5 * Eigen::MatrixXd::Identity(6, 6) + x * x.transpose();
  CHECK(logdet_psd(m, LogDetMethod::Cholesky) ==
        doctest::Approx(logdet_psd(m, LogDetMethod::Eigen)).epsilon(1e-9));

  Eigen::MatrixXd bad(2, 2);
  bad << 1.0, 0.5, -0.5, 1.0;
  CHECK_THROWS_AS(logdet_psd(bad), NumericsError);

  Eigen::MatrixXd neg = Eigen::MatrixXd::Identity(2, 2);
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(logdet_psd(neg), NumericsError);
}

TEST_CASE("quad1d") {
  CHECK(quad1d([](double x) { return x * x * x * x; }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(0.2).epsilon(1e-10));
  CHECK(quad1d([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK_THROWS_AS(quad1d([](double x) { return 1.0 / x; }, 1e-300, 1.0, 1e-12), NumericsError);
}

TEST_CASE("mc_estimate basics") {
  RandomPlan plan{7, 1000};
  const Estimate c = mc_estimate(plan, 1, [](std::int64_t, Xoshiro256&) { return 1.25; });
  CHECK(c.mean == doctest::Approx(1.25));
  CHECK(c.std_err == 0.0);
  CHECK(c.ci95_low == c.ci95_high);

  RandomPlan big{3, 1000000};
  const Estimate u = mc_estimate(big, 4, [](std::int64_t, Xoshiro256& rng) { return rng.uniform01(); });
  CHECK(std::abs(u.mean - 0.5) < 3.0 * u.std_err);
  CHECK(u.std_err == doctest::Approx(1.0 / std::sqrt(12.0e6)).epsilon(0.01));

  CHECK_THROWS(mc_estimate(RandomPlan{1, 0}, 1, [](std::int64_t, Xoshiro256&) { return 0.0; }));
}

TEST_CASE("confidence intervals cover a quadrature-known probability") {
  // Reference probability P[U+V > 1/theta] at beta=4, theta=81 from a 2-D
  // midpoint grid over the two interferer offsets (independent of the library).
  const double beta = 4.0, cut = 1.0 / 81.0;
  const int n = 3000;
  std::int64_t hits = 0;
  for (int i = 0; i < n; ++i) {
    const double l1 = -1.0 + 2.0 * (i + 0.5) / n;
    const double u = std::pow(std::abs(l1) / (2.0 - l1), beta);
    for (int j = 0; j < n; ++j) {
      const double l2 = -1.0 + 2.0 * (j + 0.5) / n;
      hits += (u + std::pow(std::abs(l2) / (2.0 + l2), beta) > cut) ? 1 : 0;
    }
  }
  const double p_ref = static_cast<double>(hits) / (static_cast<double>(n) * n);

  int covered = 0;
  for (int rep = 0; rep < 100; ++rep) {
    RandomPlan plan{1000 + static_cast<std::uint64_t>(rep), 10000};
    const Estimate e = mc_estimate(plan, 2, [&](std::int64_t, Xoshiro256& rng) {
      const double l1 = rng.uniform(-1, 1), l2 = rng.uniform(-1, 1);
      const double s = std::pow(std::abs(l1) / (2.0 - l1), beta) +
                       std::pow(std::abs(l2) / (2.0 + l2), beta);
      return s > cut ? 1.0 : 0.0;
    });
    if (e.ci95_low <= p_ref && p_ref <= e.ci95_high) ++covered;
  }
  CHECK(covered >= 93);
}

TEST_CASE("trial splitting is independent of the worker count") {
  RandomPlan plan{99, 5000};
  const auto f = [](std::int64_t i, Xoshiro256& rng) {
    return rng.uniform01() + 1e-9 * static_cast<double>(i);
  };
  const auto a = run_trials(plan, 1, f);
  const auto b = run_trials(plan, 8, f);
  CHECK(a == b);
}

TEST_CASE("log_grid endpoints and size") {
  const auto g = log_grid(0.5, 50.0, 50);
  CHECK(g.size() == 50);
  CHECK(g.front() == 0.5);
  CHECK(g.back() == 50.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
  CHECK_THROWS(log_grid(0.0, 1.0, 10));
}
