#include "rfpca/center.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "rfpca/core.hpp"
#include "rfpca/scale.hpp"

namespace rfpca {

namespace detail {

std::vector<double> mean_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t m = rows.front().size();
  std::vector<double> out(m, 0.0);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < m; ++i) out[i] += r[i];
  for (double& x : out) x /= static_cast<double>(rows.size());
  return out;
}

std::vector<double> pointwise_median_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t m = rows.front().size();
  std::vector<double> out(m);
  std::vector<double> column(rows.size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) column[j] = rows[j][i];
    out[i] = median(column);
  }
  return out;
}

namespace {

double distance(const std::vector<double>& x, const std::vector<double>& y, double w) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return std::sqrt(w * acc);
}

double objective(const std::vector<std::vector<double>>& rows, const std::vector<double>& theta,
                 double w) {
  double acc = 0.0;
  for (const auto& r : rows) acc += distance(r, theta, w);
  return acc;
}

}  // namespace

WeiszfeldResult weiszfeld_rows(const std::vector<std::vector<double>>& rows, double w, double tol,
                               int max_iter) {
  constexpr double kSingular = 1e-12;
  const std::size_t n = rows.size();
  const std::size_t m = rows.front().size();

  WeiszfeldResult out;
  out.point = pointwise_median_rows(rows);
  out.objective_trace.push_back(objective(rows, out.point, w));
  if (n == 1) {
    out.point = rows.front();
    out.objective_trace.push_back(0.0);
    return out;
  }

  std::vector<double> next(m);
  for (int k = 0; k < max_iter; ++k) {
    double weight_sum = 0.0;
    std::fill(next.begin(), next.end(), 0.0);
    int at_data = -1;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = distance(rows[i], out.point, w);
      if (d < kSingular) {
        at_data = static_cast<int>(i);
        continue;  // term dropped for this step
      }
      const double wi = 1.0 / d;
      weight_sum += wi;
      for (std::size_t j = 0; j < m; ++j) next[j] += wi * rows[i][j];
    }

    if (at_data >= 0) {
      // Subgradient test: the data curve is the minimizer when the pulled
      // directions of the remaining points do not overcome unit strength.
      std::vector<double> pull(m, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(i) == at_data) continue;
        const double d = distance(rows[i], rows[static_cast<std::size_t>(at_data)], w);
        if (d < kSingular) continue;  // duplicate of the candidate point
        for (std::size_t j = 0; j < m; ++j)
          pull[j] += (rows[i][j] - rows[static_cast<std::size_t>(at_data)][j]) / d;
      }
      double pull_norm2 = 0.0;
      for (double p : pull) pull_norm2 += p * p;
      if (std::sqrt(w * pull_norm2) <= 1.0) {
        out.point = rows[static_cast<std::size_t>(at_data)];
        out.iterations = k + 1;
        out.objective_trace.push_back(objective(rows, out.point, w));
        return out;
      }
    }

    if (weight_sum == 0.0) {
      // Every data point coincides with the iterate.
      out.iterations = k + 1;
      return out;
    }
    for (double& x : next) x /= weight_sum;

    double step2 = 0.0;
    double base2 = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double d = next[j] - out.point[j];
      step2 += d * d;
      base2 += out.point[j] * out.point[j];
    }
    out.point = next;
    out.iterations = k + 1;
    out.objective_trace.push_back(objective(rows, out.point, w));
    const double rel = std::sqrt(step2) / std::max(std::sqrt(base2), 1.0);
    if (rel <= tol) return out;
  }
  out.converged = false;
  return out;
}

}  // namespace detail

Curve mean_curve(const FunctionalSample& data) {
  return Curve(data.grid(), detail::mean_rows(data.rows()));
}

Curve pointwise_median(const FunctionalSample& data) {
  return Curve(data.grid(), detail::pointwise_median_rows(data.rows()));
}

SpatialMedianResult spatial_median(const FunctionalSample& data, double tol, int max_iter) {
  detail::WeiszfeldResult w =
      detail::weiszfeld_rows(data.rows(), data.grid().dt(), tol, max_iter);
  SpatialMedianResult out{Curve(data.grid(), std::move(w.point)), w.converged, w.iterations,
                          std::move(w.objective_trace)};
  return out;
}

}  // namespace rfpca
