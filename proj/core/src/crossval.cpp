#include "rfpca/crossval.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "rfpca/parallel.hpp"
#include "rfpca/rng.hpp"
#include "rfpca/sieve.hpp"

namespace rfpca {

void CVConfig::validate() const {
  if (ell < 1) throw std::invalid_argument("CVConfig: ell must be at least 1");
  if (kfold < 2) throw std::invalid_argument("CVConfig: K must be at least 2");
  if (param_grid.empty()) throw std::invalid_argument("CVConfig: empty parameter grid");
  for (double p : param_grid)
    if (!(p >= 0.0)) throw std::invalid_argument("CVConfig: grid values must be nonnegative");
  scale_about_zero.validate();
}

double residual_norm(const Curve& x, const std::vector<Curve>& directions) {
  if (directions.empty()) return norm(x);
  const std::vector<Curve> onb = gram_schmidt(directions);
  Curve r = x;
  for (const Curve& b : onb) {
    detail::require_same_grid(x.grid, b.grid, "residual_norm");
    const double c = inner_product(r, b);
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= c * b.values[i];
  }
  return norm(r);
}

namespace {

PPConfig fit_config(const PPConfig& tmpl, const CVConfig& cv, double param) {
  PPConfig cfg = tmpl;
  cfg.q = cv.ell;
  cfg.threads = 1;
  if (cv.target == CVTarget::Rho) {
    cfg.mode = Mode::PenalizeScale;
    cfg.rho = param;
    cfg.tau = 0.0;
  } else {
    cfg.mode = Mode::PenalizeNorm;
    cfg.tau = param;
    cfg.rho = 0.0;
  }
  return cfg;
}

struct HoldoutNorms {
  std::vector<double> norms;  // residual norms of the held-out curves
  bool failed = false;
};

// Fit on `training`, then take residual norms of the held-out centered
// curves against the fitted span.
HoldoutNorms holdout_norms(const FunctionalSample& centered,
                           const std::vector<int>& holdout_rows,
                           const std::vector<std::vector<double>>& training_rows,
                           const PPConfig& cfg) {
  HoldoutNorms out;
  try {
    const FunctionalSample training(centered.grid(), training_rows);
    const PCFit f = fit(training, cfg);
    if (f.components() < cfg.q) {
      out.failed = true;
      return out;
    }
    out.norms.reserve(holdout_rows.size());
    for (int row : holdout_rows) out.norms.push_back(residual_norm(centered.curve(row), f.directions));
  } catch (const Error&) {
    out.failed = true;
  } catch (const std::invalid_argument&) {
    out.failed = true;
  }
  return out;
}

FunctionalSample centered_sample(const FunctionalSample& data, Centering centering) {
  const std::vector<double> center =
      detail::center_rows(data.rows(), centering, data.grid().dt());
  std::vector<std::vector<double>> rows = data.rows();
  for (auto& r : rows)
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= center[j];
  return FunctionalSample(data.grid(), std::move(rows));
}

void select_minimum(CVResult& result) {
  double best = std::numeric_limits<double>::infinity();
  double best_param = std::numeric_limits<double>::quiet_NaN();
  bool any = false;
  for (const CVEntry& e : result.table) {
    if (e.excluded) continue;
    if (!any || e.criterion < best || (e.criterion == best && e.param < best_param)) {
      best = e.criterion;
      best_param = e.param;
      any = true;
    }
  }
  if (!any) throw AllDegenerateError("cross-validation: every candidate parameter failed");
  result.selected = best_param;
}

}  // namespace

CVResult rcv_loo(const FunctionalSample& data, const CVConfig& config, const PPConfig& tmpl) {
  config.validate();
  const int n = data.n();
  if (n < 3) throw std::invalid_argument("rcv_loo: needs at least three curves");

  const FunctionalSample centered = centered_sample(data, tmpl.centering);
  const std::size_t np = config.param_grid.size();

  // One result slot per (parameter, left-out index) pair.
  std::vector<HoldoutNorms> cells(np * static_cast<std::size_t>(n));
  detail::parallel_chunks(cells.size(), config.threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t c = lo; c < hi; ++c) {
      const std::size_t pi = c / static_cast<std::size_t>(n);
      const int i = static_cast<int>(c % static_cast<std::size_t>(n));
      const PPConfig cfg = fit_config(tmpl, config, config.param_grid[pi]);
      std::vector<std::vector<double>> training;
      training.reserve(static_cast<std::size_t>(n - 1));
      for (int j = 0; j < n; ++j)
        if (j != i) training.push_back(centered.row(j));
      cells[c] = holdout_norms(centered, {i}, training, cfg);
    }
  });

  CVResult result;
  result.table.resize(np);
  for (std::size_t pi = 0; pi < np; ++pi) {
    CVEntry& e = result.table[pi];
    e.param = config.param_grid[pi];
    std::vector<double> norms;
    norms.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const HoldoutNorms& cell = cells[pi * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)];
      if (cell.failed) {
        ++e.fit_failures;
        continue;
      }
      norms.push_back(cell.norms.front());
    }
    if (norms.empty()) {
      e.excluded = true;
      continue;
    }
    const double s = scale_about_zero(norms, config.scale_about_zero);
    e.criterion = s * s;
  }
  select_minimum(result);
  return result;
}

CVResult rcv_kfold(const FunctionalSample& data, const CVConfig& config, const PPConfig& tmpl) {
  config.validate();
  const int n = data.n();
  const int K = config.kfold;
  if (K > n) throw std::invalid_argument("rcv_kfold: K exceeds the sample size");

  const FunctionalSample centered = centered_sample(data, tmpl.centering);

  // Seeded random partition into K folds whose sizes differ by at most one.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  Rng rng(config.seed);
  rng.shuffle(order);
  std::vector<std::vector<int>> folds(static_cast<std::size_t>(K));
  const int base = n / K;
  const int extra = n % K;
  std::size_t pos = 0;
  for (int j = 0; j < K; ++j) {
    const int size = base + (j < extra ? 1 : 0);
    auto& fold = folds[static_cast<std::size_t>(j)];
    fold.assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                order.begin() + static_cast<std::ptrdiff_t>(pos) + size);
    pos += static_cast<std::size_t>(size);
  }

  const std::size_t np = config.param_grid.size();
  std::vector<HoldoutNorms> cells(np * static_cast<std::size_t>(K));
  detail::parallel_chunks(cells.size(), config.threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t c = lo; c < hi; ++c) {
      const std::size_t pi = c / static_cast<std::size_t>(K);
      const std::size_t j = c % static_cast<std::size_t>(K);
      const PPConfig cfg = fit_config(tmpl, config, config.param_grid[pi]);
      std::vector<char> held(static_cast<std::size_t>(n), 0);
      for (int row : folds[j]) held[static_cast<std::size_t>(row)] = 1;
      std::vector<std::vector<double>> training;
      training.reserve(static_cast<std::size_t>(n) - folds[j].size());
      for (int row = 0; row < n; ++row)
        if (!held[static_cast<std::size_t>(row)]) training.push_back(centered.row(row));
      cells[c] = holdout_norms(centered, folds[j], training, cfg);
    }
  });

  CVResult result;
  result.table.resize(np);
  for (std::size_t pi = 0; pi < np; ++pi) {
    CVEntry& e = result.table[pi];
    e.param = config.param_grid[pi];
    double criterion = 0.0;
    int used_folds = 0;
    for (int j = 0; j < K; ++j) {
      const HoldoutNorms& cell = cells[pi * static_cast<std::size_t>(K) + static_cast<std::size_t>(j)];
      if (cell.failed) {
        ++e.fit_failures;
        continue;
      }
      const double s = scale_about_zero(cell.norms, config.scale_about_zero);
      criterion += s * s;
      ++used_folds;
    }
    if (used_folds == 0) {
      e.excluded = true;
      continue;
    }
    e.criterion = criterion;
  }
  select_minimum(result);
  return result;
}

}  // namespace rfpca
