#include "rfpca/projection_pursuit.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "rfpca/center.hpp"
#include "rfpca/parallel.hpp"
#include "rfpca/penalty.hpp"

namespace rfpca {

void PPConfig::validate() const {
  scale.validate();
  if (mode == Mode::Sieve)
    throw std::invalid_argument("PPConfig: use fit_sieve for sieve estimators");
  if (q < 1) throw std::invalid_argument("PPConfig: q must be at least 1");
  if (rho < 0.0 || tau < 0.0)
    throw std::invalid_argument("PPConfig: smoothing weights must be nonnegative");
  if (mode == Mode::Raw && (rho != 0.0 || tau != 0.0))
    throw std::invalid_argument("PPConfig: raw mode takes no smoothing weight");
  if (mode == Mode::PenalizeScale && tau != 0.0)
    throw std::invalid_argument("PPConfig: penalize-scale mode uses rho only");
  if (mode == Mode::PenalizeNorm && rho != 0.0)
    throw std::invalid_argument("PPConfig: penalize-norm mode uses tau only");
}

namespace detail {

namespace {

constexpr double kDegenerate = 1e-12;

// Geometry of the candidate normalization and of the deflation step: plain
// weighted dot, or the tau-penalized form when fitting by penalizing the
// norm. Second differences of the residuals are kept in step-local scratch.
struct Geometry {
  double w;
  double dt;
  double tau;  // 0 -> plain

  bool penalized() const { return tau != 0.0; }

  double ip(std::span<const double> x, std::span<const double> y, std::span<const double> d2x,
            std::span<const double> d2y) const {
    const double plain = weighted_dot(x, y, w);
    if (!penalized()) return plain;
    return plain + tau * penalty_cross_raw(d2x, d2y, dt);
  }
};

struct IndexValue {
  double index = 0.0;
  double s = 0.0;  // scale of the projections
  bool nonconverged = false;
};

// Index of one (already normalized) candidate: scale of the projections of
// the centered data, squared and penalized when rho is active.
IndexValue candidate_index(std::span<const double> cand,
                           const std::vector<std::vector<double>>& centered,
                           const EngineConfig& cfg, std::vector<double>& z) {
  const std::size_t n = centered.size();
  z.resize(n);
  for (std::size_t j = 0; j < n; ++j) z[j] = weighted_dot(cand, centered[j], cfg.w);

  IndexValue out;
  if (cfg.scale.kind == ScaleKind::MScale) {
    const MScaleResult r = m_scale(z, cfg.scale);
    out.s = r.sigma;
    out.nonconverged = !r.converged;
  } else {
    out.s = scale_estimate(z, cfg.scale);
  }
  if (cfg.mode == Mode::PenalizeScale) {
    out.index = out.s * out.s;
    if (cfg.rho != 0.0) out.index -= cfg.rho * roughness_raw(cand, cfg.dt);
  } else {
    out.index = out.s;
  }
  return out;
}

}  // namespace

std::vector<double> center_rows(const std::vector<std::vector<double>>& rows, Centering centering,
                                double w) {
  switch (centering) {
    case Centering::Mean:
      return mean_rows(rows);
    case Centering::PointwiseMedian:
      return pointwise_median_rows(rows);
    case Centering::SpatialMedian:
      return weiszfeld_rows(rows, w, 1e-8, 500).point;
  }
  return mean_rows(rows);
}

void fix_sign(std::vector<double>& values) {
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double a = std::abs(values[i]);
    if (a > best) {
      best = a;
      arg = i;
    }
  }
  if (values[arg] < 0.0)
    for (double& v : values) v = -v;
}

EngineFit cr_fit(const std::vector<std::vector<double>>& centered, const EngineConfig& cfg) {
  const std::size_t n = centered.size();
  const std::size_t m = centered.front().size();
  const Geometry geo{cfg.w, cfg.dt, cfg.mode == Mode::PenalizeNorm ? cfg.tau : 0.0};

  EngineFit out;
  std::vector<std::vector<double>> residuals = centered;

  // Scratch for the penalized geometry.
  const std::size_t d2_len = geo.penalized() && m >= 3 ? m - 2 : 0;
  std::vector<std::vector<double>> d2_res;
  if (geo.penalized()) d2_res.assign(n, std::vector<double>(d2_len));
  std::vector<double> d2_dir(d2_len);

  for (int k = 0; k < cfg.q; ++k) {
    if (geo.penalized())
      for (std::size_t i = 0; i < n; ++i) second_difference_into(residuals[i], cfg.dt, d2_res[i]);

    // Kept candidates, in data order.
    std::vector<int> rows;
    std::vector<double> gnorms;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double g2 = geo.ip(residuals[i], residuals[i],
                               geo.penalized() ? std::span<const double>(d2_res[i])
                                               : std::span<const double>(),
                               geo.penalized() ? std::span<const double>(d2_res[i])
                                               : std::span<const double>());
      const double g = std::sqrt(g2);
      if (g >= kDegenerate) {
        rows.push_back(static_cast<int>(i));
        gnorms.push_back(g);
      }
    }
    if (rows.empty()) {
      out.degenerate = true;
      break;
    }

    // Scan every candidate; each slot is written independently.
    std::vector<IndexValue> scan(rows.size());
    parallel_chunks(rows.size(), cfg.threads, [&](std::size_t lo, std::size_t hi) {
      std::vector<double> cand(m);
      std::vector<double> z;
      for (std::size_t c = lo; c < hi; ++c) {
        const auto& r = residuals[static_cast<std::size_t>(rows[c])];
        const double inv = 1.0 / gnorms[c];
        for (std::size_t j = 0; j < m; ++j) cand[j] = r[j] * inv;
        scan[c] = candidate_index(cand, centered, cfg, z);
      }
    });

    std::size_t winner = 0;
    for (std::size_t c = 1; c < scan.size(); ++c)
      if (scan[c].index > scan[winner].index) winner = c;

    std::vector<double> direction = residuals[static_cast<std::size_t>(rows[winner])];
    {
      const double inv = 1.0 / gnorms[winner];
      for (double& v : direction) v *= inv;
    }

    out.values.push_back(scan[winner].s * scan[winner].s);
    out.attained_index.push_back(scan[winner].index);
    out.argmax_candidate.push_back(rows[winner]);
    {
      std::vector<double> idx(scan.size());
      for (std::size_t c = 0; c < scan.size(); ++c) {
        idx[c] = scan[c].index;
        if (scan[c].nonconverged) ++out.scale_nonconvergence;
      }
      out.candidate_indices.push_back(std::move(idx));
      out.candidate_rows.push_back(rows);
    }

    // Deflate in the geometry inner product.
    if (geo.penalized()) second_difference_into(direction, cfg.dt, d2_dir);
    for (std::size_t i = 0; i < n; ++i) {
      const double zi = geo.ip(direction, residuals[i], d2_dir,
                               geo.penalized() ? std::span<const double>(d2_res[i])
                                               : std::span<const double>());
      auto& r = residuals[i];
      for (std::size_t j = 0; j < m; ++j) r[j] -= zi * direction[j];
    }

    out.directions.push_back(std::move(direction));
  }
  return out;
}

}  // namespace detail

std::vector<Curve> candidate_set(const FunctionalSample& residuals, const InnerProduct& ip) {
  std::vector<Curve> out;
  for (int i = 0; i < residuals.n(); ++i) {
    Curve c = residuals.curve(i);
    const double g = ip.norm_of(c);
    if (g < 1e-12) continue;
    for (double& v : c.values) v /= g;
    out.push_back(std::move(c));
  }
  if (out.empty())
    throw AllDegenerateError("candidate_set: every residual is numerically zero");
  return out;
}

double pp_index(const Curve& a, const FunctionalSample& data, const PPConfig& config) {
  config.validate();
  detail::require_same_grid(a.grid, data.grid(), "pp_index");
  const std::vector<double> center =
      detail::center_rows(data.rows(), config.centering, data.grid().dt());
  std::vector<std::vector<double>> centered = data.rows();
  for (auto& row : centered)
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= center[j];

  detail::EngineConfig cfg;
  cfg.scale = config.scale;
  cfg.mode = config.mode;
  cfg.rho = config.rho;
  cfg.tau = config.tau;
  cfg.w = data.grid().dt();
  cfg.dt = data.grid().dt();

  std::vector<double> z;
  return detail::candidate_index(a.values, centered, cfg, z).index;
}

PCFit fit(const FunctionalSample& data, const PPConfig& config) {
  config.validate();
  if (data.n() < 2) throw std::invalid_argument("fit: needs at least two curves");
  if (config.q > data.n() - 1)
    throw std::invalid_argument("fit: q must be at most n - 1");

  const Grid& grid = data.grid();
  const std::vector<double> center = detail::center_rows(data.rows(), config.centering, grid.dt());
  std::vector<std::vector<double>> centered = data.rows();
  for (auto& row : centered)
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= center[j];

  detail::EngineConfig cfg;
  cfg.scale = config.scale;
  cfg.mode = config.mode;
  cfg.rho = config.rho;
  cfg.tau = config.tau;
  cfg.q = config.q;
  cfg.w = grid.dt();
  cfg.dt = grid.dt();
  cfg.threads = config.threads;

  detail::EngineFit efit = detail::cr_fit(centered, cfg);

  PCFit out{.directions = {},
            .values = std::move(efit.values),
            .mode = config.mode,
            .scale = config.scale,
            .rho = config.rho,
            .tau = config.tau,
            .centering = config.centering,
            .requested_components = config.q,
            .basis_dim = 0,
            .center = Curve(grid, center),
            .attained_index = std::move(efit.attained_index),
            .argmax_candidate = std::move(efit.argmax_candidate),
            .candidate_indices = std::move(efit.candidate_indices),
            .candidate_rows = std::move(efit.candidate_rows),
            .degenerate = efit.degenerate,
            .scale_nonconvergence = efit.scale_nonconvergence};
  out.directions.reserve(efit.directions.size());
  for (auto& d : efit.directions) {
    detail::fix_sign(d);
    out.directions.emplace_back(grid, std::move(d));
  }
  return out;
}

std::vector<std::vector<double>> scores(const FunctionalSample& data, const PCFit& fit) {
  detail::require_same_grid(data.grid(), fit.center.grid, "scores");
  const double w = data.grid().dt();
  std::vector<std::vector<double>> out(static_cast<std::size_t>(data.n()));
  std::vector<double> centered(static_cast<std::size_t>(data.grid().size()));
  for (int i = 0; i < data.n(); ++i) {
    const auto& row = data.row(i);
    for (std::size_t j = 0; j < centered.size(); ++j) centered[j] = row[j] - fit.center.values[j];
    auto& zrow = out[static_cast<std::size_t>(i)];
    zrow.resize(fit.directions.size());
    for (std::size_t k = 0; k < fit.directions.size(); ++k)
      zrow[k] = detail::weighted_dot(fit.directions[k].values, centered, w);
  }
  return out;
}

}  // namespace rfpca
