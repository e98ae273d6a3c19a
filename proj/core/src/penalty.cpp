#include "rfpca/penalty.hpp"

#include <cstddef>

#include "rfpca/core.hpp"

namespace rfpca {

namespace detail {

namespace {

// The m - 2 interior second differences stand in for the curvature over the
// whole interval of length (m + 1) dt, so the quadrature weight is the
// interval length divided by the number of differences. A plain dt weight
// would leave a 3 dt gap that biases the penalty low near the boundary.
double penalty_weight(double dt, std::size_t d2_len) {
  return dt * static_cast<double>(d2_len + 3) / static_cast<double>(d2_len);
}

}  // namespace

void second_difference_into(std::span<const double> values, double dt, std::span<double> out) {
  const double inv_dt2 = 1.0 / (dt * dt);
  const std::size_t m = values.size();
  for (std::size_t i = 1; i + 1 < m; ++i)
    out[i - 1] = (values[i + 1] - 2.0 * values[i] + values[i - 1]) * inv_dt2;
}

double roughness_raw(std::span<const double> values, double dt) {
  const double inv_dt2 = 1.0 / (dt * dt);
  const std::size_t m = values.size();
  double acc = 0.0;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double d = (values[i + 1] - 2.0 * values[i] + values[i - 1]) * inv_dt2;
    acc += d * d;
  }
  return penalty_weight(dt, m - 2) * acc;
}

double penalty_cross_raw(std::span<const double> d2f, std::span<const double> d2g, double dt) {
  return penalty_weight(dt, d2f.size()) * dot(d2f, d2g);
}

}  // namespace detail

std::vector<double> second_difference(const Curve& f) {
  std::vector<double> d(static_cast<std::size_t>(f.grid.size() - 2));
  detail::second_difference_into(f.values, f.grid.dt(), d);
  return d;
}

double roughness(const Curve& f) { return detail::roughness_raw(f.values, f.grid.dt()); }

double tau_inner(const Curve& f, const Curve& g, double tau) {
  detail::require_same_grid(f.grid, g.grid, "tau_inner");
  if (tau < 0.0) throw std::invalid_argument("tau_inner: tau must be nonnegative");
  const double plain = inner_product(f, g);
  if (tau == 0.0) return plain;
  const std::vector<double> df = second_difference(f);
  const std::vector<double> dg = second_difference(g);
  return plain + tau * detail::penalty_cross_raw(df, dg, f.grid.dt());
}

}  // namespace rfpca
