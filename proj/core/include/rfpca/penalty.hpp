#pragma once

#include <span>
#include <vector>

#include "rfpca/grid.hpp"

namespace rfpca {

// Central second differences {f(t_{i+1}) - 2 f(t_i) + f(t_{i-1})} / dt^2 at
// the interior points i = 1..m-2 (0-based); length m - 2.
std::vector<double> second_difference(const Curve& f);

// Roughness Psi(f) = integral of (f'')^2, discretized as dt * sum d_i^2 over
// the interior second differences.
double roughness(const Curve& f);

// <f, g>_tau = <f, g> + tau * dt * sum d_i(f) d_i(g)
double tau_inner(const Curve& f, const Curve& g, double tau);

namespace detail {

// Raw-buffer versions used by the fit engine.
void second_difference_into(std::span<const double> values, double dt, std::span<double> out);
double roughness_raw(std::span<const double> values, double dt);
double penalty_cross_raw(std::span<const double> d2f, std::span<const double> d2g, double dt);

}  // namespace detail

}  // namespace rfpca
