#pragma once

// Independent reference computations for the tests. Nothing here may call
// into the library paths it is used to check.

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracles {

// Composite Simpson quadrature on [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        int panels = 20000) {
  const double h = (b - a) / (2 * panels);
  double acc = f(a) + f(b);
  for (int i = 1; i < 2 * panels; ++i) acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Bisection for a scalar root of g on [lo, hi]; assumes a sign change.
inline double bisect(const std::function<double(double)>& g, double lo, double hi,
                     double tol = 1e-13) {
  double flo = g(lo);
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = g(mid);
    if ((flo <= 0.0) == (fm <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Golden-section minimization of a unimodal scalar function.
inline double golden_min(const std::function<double(double)>& f, double lo, double hi,
                         double tol = 1e-10) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

// Eigenvectors of the sample covariance (divisor n, mean-centered rows),
// columns ordered by decreasing eigenvalue.
inline Eigen::MatrixXd sample_cov_eigvecs(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = rows.front().size();
  Eigen::MatrixXd x(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) x(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
  const Eigen::RowVectorXd mean = x.colwise().mean();
  x.rowwise() -= mean;
  const Eigen::MatrixXd cov = x.transpose() * x / static_cast<double>(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  Eigen::MatrixXd vecs = solver.eigenvectors();
  // Eigen sorts ascending; flip to descending.
  return vecs.rowwise().reverse();
}

}  // namespace oracles
