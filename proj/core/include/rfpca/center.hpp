#pragma once

#include <vector>

#include "rfpca/grid.hpp"

namespace rfpca {

// Pointwise arithmetic mean of the sample curves.
Curve mean_curve(const FunctionalSample& data);

// Coordinate-wise median (even-n midpoint convention).
Curve pointwise_median(const FunctionalSample& data);

struct SpatialMedianResult {
  Curve median;
  bool converged = true;
  int iterations = 0;
  // Sum of L2 distances to the data at each iterate, starting value first.
  std::vector<double> objective_trace;
};

// Minimizer of sum_i ||X_i - theta|| in the grid L2 norm, computed by
// Weiszfeld iteration started at the pointwise median. When an iterate lands
// on a data curve, that curve is returned if it satisfies the subgradient
// optimality condition; otherwise its term is dropped for the step.
SpatialMedianResult spatial_median(const FunctionalSample& data, double tol = 1e-8,
                                   int max_iter = 500);

namespace detail {

// Weiszfeld on raw rows with inner-product weight w; shared by the curve
// version above and by the sieve fit, which centers coefficient vectors.
struct WeiszfeldResult {
  std::vector<double> point;
  bool converged = true;
  int iterations = 0;
  std::vector<double> objective_trace;
};

WeiszfeldResult weiszfeld_rows(const std::vector<std::vector<double>>& rows, double w, double tol,
                               int max_iter);

std::vector<double> mean_rows(const std::vector<std::vector<double>>& rows);
std::vector<double> pointwise_median_rows(const std::vector<std::vector<double>>& rows);

}  // namespace detail

}  // namespace rfpca
