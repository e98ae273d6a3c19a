#include "rfpca/sieve.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "rfpca/core.hpp"

namespace rfpca {

BasisSpec BasisSpec::fourier(int qn, const Grid& grid) {
  if (qn < 1) throw std::invalid_argument("BasisSpec: Fourier needs q_n >= 1");
  BasisSpec s{BasisKind::Fourier, qn, grid};
  if (s.dimension() > grid.size())
    throw std::invalid_argument("BasisSpec: basis dimension exceeds the grid size");
  return s;
}

BasisSpec BasisSpec::bspline(int pn, const Grid& grid) {
  if (pn < 4) throw std::invalid_argument("BasisSpec: cubic B-splines need p_n >= 4");
  BasisSpec s{BasisKind::BSpline, pn, grid};
  if (s.dimension() > grid.size())
    throw std::invalid_argument("BasisSpec: basis dimension exceeds the grid size");
  return s;
}

namespace {

// Cox-de Boor evaluation of the cubic B-spline with local knot span
// knots[j..j+4] at t. Zero-width spans contribute nothing.
double bspline_value(const std::vector<double>& knots, std::size_t j, int order, double t) {
  if (order == 1) return (t >= knots[j] && t < knots[j + 1]) ? 1.0 : 0.0;
  double value = 0.0;
  const double left_den = knots[j + static_cast<std::size_t>(order) - 1] - knots[j];
  if (left_den > 0.0) value += (t - knots[j]) / left_den * bspline_value(knots, j, order - 1, t);
  const double right_den = knots[j + static_cast<std::size_t>(order)] - knots[j + 1];
  if (right_den > 0.0)
    value += (knots[j + static_cast<std::size_t>(order)] - t) / right_den *
             bspline_value(knots, j + 1, order - 1, t);
  return value;
}

std::vector<Curve> fourier_basis(const BasisSpec& spec) {
  const Grid& g = spec.grid;
  const double mid = 0.5 * (g.a() + g.b());
  const double half = 0.5 * (g.b() - g.a());
  std::vector<Curve> basis;
  basis.reserve(static_cast<std::size_t>(spec.dimension()));
  basis.push_back(discretize(g, [](double) { return 1.0; }));
  for (int k = 1; k <= spec.param; ++k) {
    const double freq = k * std::numbers::pi;
    basis.push_back(discretize(g, [&](double t) { return std::cos(freq * (t - mid) / half); }));
    basis.push_back(discretize(g, [&](double t) { return std::sin(freq * (t - mid) / half); }));
  }
  return basis;
}

std::vector<Curve> bspline_basis(const BasisSpec& spec) {
  const Grid& g = spec.grid;
  const int p = spec.param;
  const int intervals = p - 3;
  // Clamped knot vector: 4-fold endpoints around equispaced interior knots.
  std::vector<double> knots;
  knots.reserve(static_cast<std::size_t>(p + 4));
  for (int i = 0; i < 4; ++i) knots.push_back(g.a());
  for (int i = 1; i < intervals; ++i)
    knots.push_back(g.a() + (g.b() - g.a()) * static_cast<double>(i) / intervals);
  for (int i = 0; i < 4; ++i) knots.push_back(g.b());

  std::vector<Curve> basis;
  basis.reserve(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j)
    basis.push_back(discretize(
        g, [&](double t) { return bspline_value(knots, static_cast<std::size_t>(j), 4, t); }));
  return basis;
}

}  // namespace

std::vector<Curve> build_basis(const BasisSpec& spec) {
  return spec.kind == BasisKind::Fourier ? fourier_basis(spec) : bspline_basis(spec);
}

std::vector<Curve> gram_schmidt(const std::vector<Curve>& basis) {
  if (basis.empty()) throw std::invalid_argument("gram_schmidt: empty basis");
  std::vector<Curve> onb;
  onb.reserve(basis.size());
  for (const Curve& v : basis) {
    detail::require_same_grid(v.grid, basis.front().grid, "gram_schmidt");
    const double original = norm(v);
    Curve u = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Curve& b : onb) {
        const double c = inner_product(u, b);
        for (std::size_t i = 0; i < u.values.size(); ++i) u.values[i] -= c * b.values[i];
      }
    }
    const double remaining = norm(u);
    if (!(remaining > 1e-10 * original) || remaining == 0.0)
      throw RankDeficientBasisError("gram_schmidt: basis is numerically rank deficient");
    for (double& x : u.values) x /= remaining;
    onb.push_back(std::move(u));
  }
  return onb;
}

std::vector<std::vector<double>> inner_scores(const FunctionalSample& data,
                                              const std::vector<Curve>& onb) {
  if (onb.empty()) throw std::invalid_argument("inner_scores: empty basis");
  for (const Curve& b : onb) detail::require_same_grid(b.grid, data.grid(), "inner_scores");
  for (std::size_t j = 0; j < onb.size(); ++j)
    for (std::size_t k = j; k < onb.size(); ++k) {
      const double g = inner_product(onb[j], onb[k]);
      if (std::abs(g - (j == k ? 1.0 : 0.0)) > 1e-6)
        throw NonOrthonormalBasisError("inner_scores: basis is not orthonormal");
    }

  std::vector<std::vector<double>> scores(static_cast<std::size_t>(data.n()));
  const double w = data.grid().dt();
  for (int i = 0; i < data.n(); ++i) {
    auto& row = scores[static_cast<std::size_t>(i)];
    row.resize(onb.size());
    for (std::size_t j = 0; j < onb.size(); ++j)
      row[j] = detail::weighted_dot(data.row(i), onb[j].values, w);
  }
  return scores;
}

PCFit fit_sieve(const FunctionalSample& data, const BasisSpec& basis, const ScaleSpec& scale,
                int q, Centering centering, int threads) {
  scale.validate();
  if (data.n() < 2) throw std::invalid_argument("fit_sieve: needs at least two curves");
  if (q < 1) throw std::invalid_argument("fit_sieve: q must be at least 1");
  if (q > basis.dimension()) throw std::invalid_argument("fit_sieve: q exceeds the basis dimension");
  if (q > data.n() - 1) throw std::invalid_argument("fit_sieve: q must be at most n - 1");
  detail::require_same_grid(basis.grid, data.grid(), "fit_sieve");

  const std::vector<Curve> onb = gram_schmidt(build_basis(basis));
  const std::vector<std::vector<double>> score_rows = inner_scores(data, onb);
  const std::size_t p = onb.size();

  // Orthonormal coordinates make the curve norm the Euclidean coefficient
  // norm, so the CR scan runs with unit weight.
  const std::vector<double> center_coef = detail::center_rows(score_rows, centering, 1.0);
  std::vector<std::vector<double>> centered = score_rows;
  for (auto& row : centered)
    for (std::size_t j = 0; j < p; ++j) row[j] -= center_coef[j];

  detail::EngineConfig cfg;
  cfg.scale = scale;
  cfg.mode = Mode::Raw;
  cfg.q = q;
  cfg.w = 1.0;
  cfg.dt = 1.0;
  cfg.threads = threads;
  detail::EngineFit efit = detail::cr_fit(centered, cfg);

  const Grid& grid = data.grid();
  auto expand = [&](const std::vector<double>& coef) {
    std::vector<double> values(static_cast<std::size_t>(grid.size()), 0.0);
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t i = 0; i < values.size(); ++i) values[i] += coef[j] * onb[j].values[i];
    return values;
  };

  Curve center(grid, expand(center_coef));

  PCFit out{.directions = {},
            .values = {},
            .mode = Mode::Sieve,
            .scale = scale,
            .rho = 0.0,
            .tau = 0.0,
            .centering = centering,
            .requested_components = q,
            .basis_dim = static_cast<int>(p),
            .center = center,
            .attained_index = std::move(efit.attained_index),
            .argmax_candidate = std::move(efit.argmax_candidate),
            .candidate_indices = std::move(efit.candidate_indices),
            .candidate_rows = std::move(efit.candidate_rows),
            .degenerate = efit.degenerate,
            .scale_nonconvergence = efit.scale_nonconvergence};

  // Map back to curves, renormalize in the grid norm, and recompute the
  // principal values from the actual projections so that
  // values[k] = s_n^2(directions[k]) holds in curve space.
  const double w = grid.dt();
  std::vector<double> proj(static_cast<std::size_t>(data.n()));
  for (auto& coef : efit.directions) {
    std::vector<double> values = expand(coef);
    Curve dir(grid, std::move(values));
    const double nrm = norm(dir);
    for (double& x : dir.values) x /= nrm;
    detail::fix_sign(dir.values);
    for (int i = 0; i < data.n(); ++i) {
      double acc = 0.0;
      const auto& row = data.row(i);
      for (std::size_t j = 0; j < row.size(); ++j)
        acc += dir.values[j] * (row[j] - center.values[j]);
      proj[static_cast<std::size_t>(i)] = w * acc;
    }
    const double s = scale_estimate(proj, scale);
    out.values.push_back(s * s);
    out.directions.push_back(std::move(dir));
  }
  return out;
}

}  // namespace rfpca
