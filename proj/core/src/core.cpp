#include "rfpca/core.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "rfpca/penalty.hpp"

namespace rfpca {

namespace detail {

double dot(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double weighted_dot(std::span<const double> x, std::span<const double> y, double w) {
  return w * dot(x, y);
}

}  // namespace detail

double inner_product(const Curve& f, const Curve& g) {
  detail::require_same_grid(f.grid, g.grid, "inner_product");
  return detail::weighted_dot(f.values, g.values, f.grid.dt());
}

double norm(const Curve& f) { return std::sqrt(inner_product(f, f)); }

InnerProduct InnerProduct::penalized(double tau) {
  if (tau < 0.0) throw std::invalid_argument("InnerProduct: tau must be nonnegative");
  InnerProduct ip;
  ip.tau_ = tau;
  return ip;
}

double InnerProduct::operator()(const Curve& f, const Curve& g) const {
  if (tau_ == 0.0) return inner_product(f, g);
  return tau_inner(f, g, tau_);
}

double InnerProduct::norm_of(const Curve& f) const { return std::sqrt((*this)(f, f)); }

Curve orthogonal_residual(const Curve& f, std::span<const Curve> basis, const InnerProduct& ip,
                          double gram_tol) {
  for (const Curve& b : basis) detail::require_same_grid(f.grid, b.grid, "orthogonal_residual");
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t k = j; k < basis.size(); ++k) {
      const double g = ip(basis[j], basis[k]);
      const double target = (j == k) ? 1.0 : 0.0;
      if (std::abs(g - target) > gram_tol)
        throw NonOrthonormalBasisError("orthogonal_residual: basis is not orthonormal under the given inner product");
    }
  }
  Curve r = f;
  for (const Curve& b : basis) {
    const double c = ip(r, b);
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= c * b.values[i];
  }
  return r;
}

}  // namespace rfpca
