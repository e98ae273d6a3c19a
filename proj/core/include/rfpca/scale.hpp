#pragma once

#include <span>
#include <vector>

namespace rfpca {

enum class ScaleKind { SD, MAD, MScale };
enum class ScaleLocation { Median, Zero, Supplied };

// Which scale statistic serves as the projection index, and its tuning.
// `c` is the score tuning constant for the M-scale (1.56 pairs with
// delta = 1/2 for consistency at the normal) and the normalization constant
// for the MAD (1.4826 ~ 1/qnorm(0.75)).
struct ScaleSpec {
  ScaleKind kind = ScaleKind::MScale;
  double c = 1.56;
  double delta = 0.5;
  int max_iter = 100;
  double tol = 1e-9;
  ScaleLocation location = ScaleLocation::Median;
  double supplied_location = 0.0;

  static ScaleSpec sd() {
    ScaleSpec s;
    s.kind = ScaleKind::SD;
    return s;
  }
  static ScaleSpec mad() {
    ScaleSpec s;
    s.kind = ScaleKind::MAD;
    s.c = 1.4826;
    return s;
  }
  static ScaleSpec mscale(double c = 1.56, double delta = 0.5) {
    ScaleSpec s;
    s.kind = ScaleKind::MScale;
    s.c = c;
    s.delta = delta;
    return s;
  }

  ScaleSpec about_zero() const {
    ScaleSpec s = *this;
    s.location = ScaleLocation::Zero;
    return s;
  }

  void validate() const;
};

// Beaton-Tukey (bisquare) score: min(3 (y/c)^2 - 3 (y/c)^4 + (y/c)^6, 1).
// Even, nondecreasing on [0, inf), saturates at 1 for |y| >= c.
double chi_beaton_tukey(double y, double c);

// d/dy of the score; 0 outside (-c, c).
double chi_beaton_tukey_deriv(double y, double c);

// IRLS weight w(y) = chi(y) / y^2 for y != 0 and w(0) = chi''(0) = 6 / c^2.
double weight_chi(double y, double c);

// Median with the even-length midpoint convention. Takes a copy on purpose.
double median(std::vector<double> values);

// Standard deviation with divisor n (population form). Requires n >= 2.
double sd(std::span<const double> sample);

// c * median(|y - median(y)|). Requires n >= 2.
double mad(std::span<const double> sample, double c = 1.4826);

struct MScaleResult {
  double sigma = 0.0;
  bool converged = true;
  bool degenerate = false;  // no positive solution; sigma = 0 returned
  int iterations = 0;
  double equation_residual = 0.0;  // |avg chi(r/sigma) - delta|
};

// M-estimate of scale solving (1/n) sum chi((y_i - mu) / sigma) = delta by
// re-weighting, started at the MAD of the residuals.
MScaleResult m_scale(std::span<const double> sample, const ScaleSpec& spec);

// The scale statistic selected by `spec` (SD / MAD / M-scale).
double scale_estimate(std::span<const double> sample, const ScaleSpec& spec);

// Scale about zero: no location is removed. SD maps to the root mean square,
// MAD to c * median(|y|), MScale to the M-scale with mu = 0. Accepts n >= 1.
double scale_about_zero(std::span<const double> sample, const ScaleSpec& spec);

}  // namespace rfpca
