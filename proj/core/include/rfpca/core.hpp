#pragma once

#include <span>
#include <vector>

#include "rfpca/grid.hpp"

namespace rfpca {

// Quadrature approximation of the L2 inner product on the grid:
// <f, g> = dt * sum_i f(t_i) g(t_i).
double inner_product(const Curve& f, const Curve& g);

// ||f|| = sqrt(<f, f>)
double norm(const Curve& f);

// Inner product choice shared by the estimators: the plain L2 form, or the
// second-derivative penalized form <f,g> + tau * [f,g].
class InnerProduct {
 public:
  InnerProduct() = default;
  static InnerProduct penalized(double tau);

  double tau() const { return tau_; }
  double operator()(const Curve& f, const Curve& g) const;
  double norm_of(const Curve& f) const;

 private:
  double tau_ = 0.0;
};

// f minus its projection onto span(basis) under `ip`. The basis must be
// pairwise ip-orthonormal; the Gram matrix is checked to `gram_tol`.
Curve orthogonal_residual(const Curve& f, std::span<const Curve> basis,
                          const InnerProduct& ip = {}, double gram_tol = 1e-8);

namespace detail {

// One shared out-of-line accumulation path so that every caller sees
// bit-identical dot products.
double dot(std::span<const double> x, std::span<const double> y);
double weighted_dot(std::span<const double> x, std::span<const double> y, double w);

}  // namespace detail

}  // namespace rfpca
