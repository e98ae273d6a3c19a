#include "rfpca/scale.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "rfpca/errors.hpp"

namespace rfpca {

void ScaleSpec::validate() const {
  if (!(c > 0.0)) throw std::invalid_argument("ScaleSpec: c must be positive");
  if (kind == ScaleKind::MScale && !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("ScaleSpec: delta must lie in (0, 1)");
  if (!(tol > 0.0)) throw std::invalid_argument("ScaleSpec: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("ScaleSpec: max_iter must be at least 1");
}

double chi_beaton_tukey(double y, double c) {
  const double t = y / c;
  const double u = t * t;
  if (u >= 1.0) return 1.0;
  return u * (3.0 + u * (-3.0 + u));
}

double chi_beaton_tukey_deriv(double y, double c) {
  const double t = y / c;
  const double u = t * t;
  if (u >= 1.0) return 0.0;
  // d/dy [3 t^2 - 3 t^4 + t^6] = (6 t - 12 t^3 + 6 t^5) / c
  return (6.0 * t - 12.0 * t * u + 6.0 * t * u * u) / c;
}

double weight_chi(double y, double c) {
  if (y == 0.0) return 6.0 / (c * c);
  return chi_beaton_tukey(y, c) / (y * y);
}

double median(std::vector<double> values) {
  if (values.empty()) throw TooFewPointsError("median: empty sample");
  const std::size_t n = values.size();
  const std::size_t mid = n / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double hi = values[mid];
  if (n % 2 == 1) return hi;
  const double lo = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lo + hi) / 2.0;
}

double sd(std::span<const double> sample) {
  const std::size_t n = sample.size();
  if (n < 2) throw TooFewPointsError("sd: needs at least two points");
  double mean = 0.0;
  for (double x : sample) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : sample) {
    const double d = x - mean;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(n));
}

double mad(std::span<const double> sample, double c) {
  if (sample.size() < 2) throw TooFewPointsError("mad: needs at least two points");
  const double med = median(std::vector<double>(sample.begin(), sample.end()));
  std::vector<double> dev(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) dev[i] = std::abs(sample[i] - med);
  return c * median(std::move(dev));
}

namespace {

double location_of(std::span<const double> sample, const ScaleSpec& spec) {
  switch (spec.location) {
    case ScaleLocation::Median:
      return median(std::vector<double>(sample.begin(), sample.end()));
    case ScaleLocation::Zero:
      return 0.0;
    case ScaleLocation::Supplied:
      return spec.supplied_location;
  }
  return 0.0;
}

double chi_average(const std::vector<double>& residuals, double sigma, double c) {
  double acc = 0.0;
  for (double r : residuals) acc += chi_beaton_tukey(r / sigma, c);
  return acc / static_cast<double>(residuals.size());
}

MScaleResult m_scale_residuals(std::vector<double> residuals, const ScaleSpec& spec) {
  MScaleResult out;
  const std::size_t n = residuals.size();

  std::size_t nonzero = 0;
  for (double r : residuals)
    if (r != 0.0) ++nonzero;

  // A positive solution of the M-equation exists only when the fraction of
  // nonzero residuals exceeds delta.
  if (static_cast<double>(nonzero) <= spec.delta * static_cast<double>(n)) {
    out.sigma = 0.0;
    out.degenerate = true;
    return out;
  }

  std::vector<double> absr(n);
  for (std::size_t i = 0; i < n; ++i) absr[i] = std::abs(residuals[i]);
  double sigma = 1.4826 * median(absr);
  if (sigma == 0.0) {
    // MAD start collapsed; fall back to the mean absolute deviation.
    double mean_abs = 0.0;
    for (double a : absr) mean_abs += a;
    sigma = mean_abs / static_cast<double>(n);
    if (sigma == 0.0) {
      out.sigma = 0.0;
      out.degenerate = true;
      return out;
    }
  }

  const double target = spec.tol * spec.delta;
  double residual = std::abs(chi_average(residuals, sigma, spec.c) - spec.delta);
  int k = 0;
  while (residual > target && k < spec.max_iter) {
    double acc = 0.0;
    for (double r : residuals) acc += weight_chi(r / sigma, spec.c) * r * r;
    const double next2 = acc / (spec.delta * static_cast<double>(n));
    sigma = std::sqrt(next2);
    residual = std::abs(chi_average(residuals, sigma, spec.c) - spec.delta);
    ++k;
  }

  if (residual > target) {
    // Re-weighting stalls when most scores sit near saturation; the average
    // score is monotone in sigma, so finish with a bisection refinement.
    double lo = sigma, hi = sigma;
    if (chi_average(residuals, sigma, spec.c) > spec.delta) {
      do {
        hi *= 2.0;
      } while (chi_average(residuals, hi, spec.c) > spec.delta && hi < 1e300);
    } else {
      do {
        lo *= 0.5;
      } while (chi_average(residuals, lo, spec.c) < spec.delta && lo > 1e-300);
    }
    for (int b = 0; b < 200 && residual > target; ++b) {
      const double mid = 0.5 * (lo + hi);
      const double avg = chi_average(residuals, mid, spec.c);
      if (avg > spec.delta)
        lo = mid;
      else
        hi = mid;
      sigma = mid;
      residual = std::abs(avg - spec.delta);
    }
  }

  out.sigma = sigma;
  out.iterations = k;
  out.equation_residual = residual;
  out.converged = residual <= target;
  return out;
}

}  // namespace

MScaleResult m_scale(std::span<const double> sample, const ScaleSpec& spec) {
  spec.validate();
  if (sample.size() < 1) throw TooFewPointsError("m_scale: empty sample");
  if (sample.size() < 2 && spec.location == ScaleLocation::Median)
    throw TooFewPointsError("m_scale: needs at least two points");
  const double mu = location_of(sample, spec);
  std::vector<double> residuals(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) residuals[i] = sample[i] - mu;
  return m_scale_residuals(std::move(residuals), spec);
}

double scale_estimate(std::span<const double> sample, const ScaleSpec& spec) {
  switch (spec.kind) {
    case ScaleKind::SD:
      return sd(sample);
    case ScaleKind::MAD:
      return mad(sample, spec.c);
    case ScaleKind::MScale:
      return m_scale(sample, spec).sigma;
  }
  return 0.0;
}

double scale_about_zero(std::span<const double> sample, const ScaleSpec& spec) {
  if (sample.empty()) throw TooFewPointsError("scale_about_zero: empty sample");
  switch (spec.kind) {
    case ScaleKind::SD: {
      double acc = 0.0;
      for (double x : sample) acc += x * x;
      return std::sqrt(acc / static_cast<double>(sample.size()));
    }
    case ScaleKind::MAD: {
      std::vector<double> a(sample.size());
      for (std::size_t i = 0; i < sample.size(); ++i) a[i] = std::abs(sample[i]);
      return spec.c * median(std::move(a));
    }
    case ScaleKind::MScale: {
      ScaleSpec z = spec;
      z.location = ScaleLocation::Zero;
      return m_scale(sample, z).sigma;
    }
  }
  return 0.0;
}

}  // namespace rfpca
