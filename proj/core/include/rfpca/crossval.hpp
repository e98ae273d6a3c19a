#pragma once

#include <cstdint>
#include <vector>

#include "rfpca/projection_pursuit.hpp"

namespace rfpca {

// Which smoothing weight the cross-validation tunes.
enum class CVTarget { Tau, Rho };

struct CVConfig {
  int ell = 1;  // number of components retained by the criterion
  int kfold = 4;
  std::vector<double> param_grid;
  ScaleSpec scale_about_zero = ScaleSpec::mscale().about_zero();
  std::uint64_t seed = 0;
  CVTarget target = CVTarget::Rho;
  int threads = 1;

  void validate() const;
};

struct CVEntry {
  double param = 0.0;
  double criterion = 0.0;
  int fit_failures = 0;
  bool excluded = false;  // every fit failed for this parameter
};

struct CVResult {
  double selected = 0.0;
  std::vector<CVEntry> table;
};

// Norm of the component of `x` orthogonal to span(directions) in the plain
// inner product. The directions are re-orthonormalized internally, so
// tau-orthonormal inputs are accepted as-is.
double residual_norm(const Curve& x, const std::vector<Curve>& directions);

// Leave-one-out robust cross-validation: centers the data once with the
// template's centering, refits without each observation for every grid
// value, and minimizes the squared scale-about-zero of the residual norms.
CVResult rcv_loo(const FunctionalSample& data, const CVConfig& config, const PPConfig& tmpl);

// K-fold variant with a seeded random partition into folds of near-equal
// size; the criterion sums the per-fold squared scales.
CVResult rcv_kfold(const FunctionalSample& data, const CVConfig& config, const PPConfig& tmpl);

}  // namespace rfpca
