#include "wyner/numerics.hpp"

#include <cmath>

namespace wyner {

double qfunc(double x) { return 0.5 * std::erfc(x * M_SQRT1_2); }

double logdet_psd(const Eigen::MatrixXd& m, LogDetMethod method, int* clamped) {
  if (m.rows() != m.cols()) throw NumericsError("logdet_psd: matrix not square");
  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * std::max(scale, 1.0)) {
    throw NumericsError("logdet_psd: matrix not symmetric");
  }
  if (clamped) *clamped = 0;

  if (method == LogDetMethod::Cholesky || method == LogDetMethod::Auto) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() == Eigen::Success) {
      return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    }
    if (method == LogDetMethod::Cholesky) {
      throw NumericsError("logdet_psd: Cholesky factorization failed");
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericsError("logdet_psd: eigendecomposition failed");
  const double floor = -1e-8 * std::max(scale, 1.0);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double ev = es.eigenvalues()[i];
    if (ev < floor) throw NumericsError("logdet_psd: matrix has a negative eigenvalue");
    if (ev <= 0.0) {
      if (clamped) ++*clamped;
      return -std::numeric_limits<double>::infinity();
    }
    sum += std::log(ev);
  }
  return sum;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double fm, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, flm);
  const double right = simpson(f, m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) throw NumericsError("quad1d: did not converge");
  return adapt(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double quad1d(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(tol > 0)) throw NumericsError("quad1d: tolerance must be positive");
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson(f, a, fa, b, fb, fm);
  return adapt(f, a, fa, b, fb, fm, whole, tol, 52);
}

}  // namespace wyner
