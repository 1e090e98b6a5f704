#pragma once
#include <Eigen/Dense>
#include <functional>
#include <stdexcept>

namespace wyner {

class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Standard Gaussian CCDF, Q(x) = 0.5 * erfc(x / sqrt(2)).
double qfunc(double x);

enum class LogDetMethod { Auto, Cholesky, Eigen };

// Natural-log determinant of a symmetric PSD matrix. Asymmetry beyond 1e-10
// (relative) is rejected. Eigenvalues in [-1e-8*||M||, 0) are clamped to zero
// and counted in *clamped; anything more negative throws.
double logdet_psd(const Eigen::MatrixXd& m, LogDetMethod method = LogDetMethod::Auto,
                  int* clamped = nullptr);

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
// Throws NumericsError if the recursion cannot reach the tolerance.
double quad1d(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

}  // namespace wyner
