#include "rfpca/simulate.hpp"

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "rfpca/core.hpp"
#include "rfpca/parallel.hpp"
#include "rfpca/rng.hpp"

namespace rfpca {

SimModelKind sim_model_from_string(const std::string& name) {
  if (name == "C0") return SimModelKind::C0;
  if (name == "C2") return SimModelKind::C2;
  if (name == "C3a") return SimModelKind::C3a;
  if (name == "C3b") return SimModelKind::C3b;
  if (name == "C23") return SimModelKind::C23;
  if (name == "Cauchy" || name == "CCauchy" || name == "C_Cauchy") return SimModelKind::Cauchy;
  throw std::invalid_argument("unknown simulation model: " + name);
}

std::string to_string(SimModelKind kind) {
  switch (kind) {
    case SimModelKind::C0: return "C0";
    case SimModelKind::C2: return "C2";
    case SimModelKind::C3a: return "C3a";
    case SimModelKind::C3b: return "C3b";
    case SimModelKind::C23: return "C23";
    case SimModelKind::Cauchy: return "Cauchy";
  }
  return "?";
}

std::string to_string(ScaleKind kind) {
  switch (kind) {
    case ScaleKind::SD: return "sd";
    case ScaleKind::MAD: return "mad";
    case ScaleKind::MScale: return "mscale";
  }
  return "?";
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Raw: return "raw";
    case Mode::PenalizeScale: return "pen-scale";
    case Mode::PenalizeNorm: return "pen-norm";
    case Mode::Sieve: return "sieve";
  }
  return "?";
}

std::string to_string(Centering centering) {
  switch (centering) {
    case Centering::Mean: return "mean";
    case Centering::PointwiseMedian: return "pmedian";
    case Centering::SpatialMedian: return "smedian";
  }
  return "?";
}

double phi1_raw(double t) { return std::sin(4.0 * std::numbers::pi * t); }
double phi2_raw(double t) { return std::cos(7.0 * std::numbers::pi * t); }
double phi3_raw(double t) { return std::cos(15.0 * std::numbers::pi * t); }

std::array<Curve, 3> true_directions(const Grid& grid) {
  auto unit = [&](Curve c) {
    const double nrm = norm(c);
    for (double& v : c.values) v /= nrm;
    return c;
  };
  return {unit(discretize(grid, phi1_raw)), unit(discretize(grid, phi2_raw)),
          unit(discretize(grid, phi3_raw))};
}

namespace {

double mixture(Rng& rng, double clean_sd, double outlier_mean, double eps) {
  if (rng.uniform() < eps) return rng.normal(outlier_mean, 0.1);  // N(mu, 0.01)
  return rng.normal(0.0, clean_sd);
}

}  // namespace

std::vector<std::array<double, 3>> gen_scores(const SimModel& model) {
  if (model.n < 2) throw std::invalid_argument("gen_scores: n must be at least 2");
  Rng rng(model.seed);
  std::vector<std::array<double, 3>> z(static_cast<std::size_t>(model.n));
  for (auto& row : z) {
    switch (model.kind) {
      case SimModelKind::C0:
        row = {rng.normal(0.0, model.sigma1), rng.normal(0.0, model.sigma2),
               rng.normal(0.0, model.sigma3)};
        break;
      case SimModelKind::C2:
        row[0] = rng.normal(0.0, model.sigma1);
        row[1] = mixture(rng, model.sigma2, 10.0, 0.2);
        row[2] = rng.normal(0.0, model.sigma3);
        break;
      case SimModelKind::C3a:
        row[0] = rng.normal(0.0, model.sigma1);
        row[1] = rng.normal(0.0, model.sigma2);
        row[2] = mixture(rng, model.sigma3, 15.0, 0.2);
        break;
      case SimModelKind::C3b:
        row[0] = rng.normal(0.0, model.sigma1);
        row[1] = rng.normal(0.0, model.sigma2);
        row[2] = mixture(rng, model.sigma3, 6.0, 0.2);
        break;
      case SimModelKind::C23:
        row[0] = rng.normal(0.0, model.sigma1);
        row[1] = mixture(rng, model.sigma2, 15.0, 0.1);
        row[2] = mixture(rng, model.sigma3, 20.0, 0.1);
        break;
      case SimModelKind::Cauchy: {
        // Elliptical Cauchy: Sigma^{1/2} U / |W| with U standard 3-normal.
        const double u1 = rng.normal();
        const double u2 = rng.normal();
        const double u3 = rng.normal();
        double w = rng.normal();
        if (w == 0.0) w = std::numeric_limits<double>::min();
        const double inv = 1.0 / std::abs(w);
        row = {model.sigma1 * u1 * inv, model.sigma2 * u2 * inv, model.sigma3 * u3 * inv};
        break;
      }
    }
  }
  return z;
}

FunctionalSample gen_sample(const SimModel& model) {
  const std::array<Curve, 3> phi = true_directions(model.grid);
  const std::vector<std::array<double, 3>> z = gen_scores(model);
  const std::size_t m = static_cast<std::size_t>(model.grid.size());
  std::vector<std::vector<double>> rows(z.size(), std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < z.size(); ++i)
    for (int j = 0; j < 3; ++j) {
      const double c = z[i][static_cast<std::size_t>(j)];
      const auto& v = phi[static_cast<std::size_t>(j)].values;
      for (std::size_t k = 0; k < m; ++k) rows[i][k] += c * v[k];
    }
  return FunctionalSample(model.grid, std::move(rows));
}

double direction_error(const Curve& estimate, const Curve& truth) {
  detail::require_same_grid(estimate.grid, truth.grid, "direction_error");
  const double nrm = norm(estimate);
  if (nrm < 1e-12) throw std::invalid_argument("direction_error: zero estimate");
  const double cosine = inner_product(estimate, truth) / nrm;
  return 2.0 - 2.0 * std::abs(cosine);
}

namespace {

struct RepOutcome {
  std::array<double, 3> d{std::numeric_limits<double>::quiet_NaN(),
                          std::numeric_limits<double>::quiet_NaN(),
                          std::numeric_limits<double>::quiet_NaN()};
  double param = std::numeric_limits<double>::quiet_NaN();
  bool failed = false;
};

RepOutcome run_one(const SimModel& model, const EstimatorSpec& est, int components,
                   std::uint64_t mc_seed, std::uint64_t model_id, std::uint64_t est_id,
                   std::uint64_t rep) {
  RepOutcome out;
  SimModel rep_model = model;
  rep_model.seed = Rng::mix(Rng::mix(mc_seed, model_id), rep);
  const FunctionalSample sample = gen_sample(rep_model);
  const std::array<Curve, 3> truth = true_directions(model.grid);

  try {
    double param = 0.0;
    if (est.smoothing.kind == SmoothingSelection::Kind::Fixed) {
      param = est.smoothing.fixed_value;
    } else if (est.smoothing.kind == SmoothingSelection::Kind::KFoldCV) {
      CVConfig cv;
      cv.ell = est.smoothing.ell;
      cv.kfold = est.smoothing.kfold;
      cv.param_grid = est.smoothing.grid;
      cv.scale_about_zero = est.cv_scale_about_zero();
      cv.seed = Rng::mix(Rng::mix(Rng::mix(mc_seed, model_id), est_id + 101), rep);
      cv.target = est.mode == Mode::PenalizeNorm ? CVTarget::Tau : CVTarget::Rho;
      PPConfig tmpl;
      tmpl.scale = est.scale;
      tmpl.centering = est.centering;
      const CVResult sel = rcv_kfold(sample, cv, tmpl);
      param = sel.selected;
    }
    out.param = param;

    PCFit f = [&] {
      if (est.mode == Mode::Sieve) {
        const BasisSpec basis = est.basis_kind == BasisKind::Fourier
                                    ? BasisSpec::fourier(est.basis_param, model.grid)
                                    : BasisSpec::bspline(est.basis_param, model.grid);
        return fit_sieve(sample, basis, est.scale, components, est.centering);
      }
      PPConfig cfg;
      cfg.scale = est.scale;
      cfg.mode = est.mode;
      cfg.centering = est.centering;
      cfg.q = components;
      if (est.mode == Mode::PenalizeScale) cfg.rho = param;
      if (est.mode == Mode::PenalizeNorm) cfg.tau = param;
      return fit(sample, cfg);
    }();

    if (f.components() < components) {
      out.failed = true;
      return out;
    }
    for (int j = 0; j < 3 && j < components; ++j)
      out.d[static_cast<std::size_t>(j)] =
          direction_error(f.directions[static_cast<std::size_t>(j)], truth[static_cast<std::size_t>(j)]);
  } catch (const Error&) {
    out.failed = true;
  } catch (const std::invalid_argument&) {
    out.failed = true;
  }
  return out;
}

}  // namespace

MCSummary run_monte_carlo(const MCRequest& request) {
  if (request.replications < 1)
    throw std::invalid_argument("run_monte_carlo: needs at least one replication");
  MCSummary summary;
  summary.replications = request.replications;
  summary.seed = request.seed;

  for (std::size_t mi = 0; mi < request.models.size(); ++mi) {
    for (std::size_t ei = 0; ei < request.estimators.size(); ++ei) {
      const SimModel& model = request.models[mi];
      const EstimatorSpec& est = request.estimators[ei];
      const std::size_t nr = static_cast<std::size_t>(request.replications);
      std::vector<RepOutcome> reps(nr);
      detail::parallel_chunks(nr, request.threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t r = lo; r < hi; ++r)
          reps[r] = run_one(model, est, request.components, request.seed, mi, ei, r);
      });

      MCCell cell;
      cell.model = to_string(model.kind);
      cell.estimator = est.label.empty()
                           ? to_string(est.scale.kind) + "/" + to_string(est.mode)
                           : est.label;
      cell.scale_kind = est.scale.kind;
      cell.mode = est.mode;
      cell.per_rep_d.reserve(nr);
      cell.per_rep_param.reserve(nr);
      std::array<double, 3> acc{0.0, 0.0, 0.0};
      double param_acc = 0.0;
      for (const RepOutcome& r : reps) {
        cell.per_rep_d.push_back(r.d);
        cell.per_rep_param.push_back(r.param);
        if (r.failed) {
          ++cell.failures;
          continue;
        }
        for (int j = 0; j < 3; ++j) acc[static_cast<std::size_t>(j)] += r.d[static_cast<std::size_t>(j)];
        if (std::isfinite(r.param)) param_acc += r.param;
        ++cell.replications;
      }
      if (cell.replications > 0) {
        for (int j = 0; j < 3; ++j)
          cell.mean_d[static_cast<std::size_t>(j)] =
              acc[static_cast<std::size_t>(j)] / cell.replications;
        cell.mean_param = param_acc / cell.replications;
      }
      summary.cells.push_back(std::move(cell));
    }
  }
  return summary;
}

void write_mc_csv(const MCSummary& summary, std::ostream& os) {
  os << "model,estimator,scale,mode,param,j,mean_Dj,NR,failures\n";
  char buf[64];
  for (const MCCell& cell : summary.cells) {
    for (int j = 0; j < 3; ++j) {
      os << cell.model << ',' << cell.estimator << ',' << to_string(cell.scale_kind) << ','
         << to_string(cell.mode) << ',';
      std::snprintf(buf, sizeof buf, "%.17g", cell.mean_param);
      os << buf << ',' << (j + 1) << ',';
      std::snprintf(buf, sizeof buf, "%.17g", cell.mean_d[static_cast<std::size_t>(j)]);
      os << buf << ',' << cell.replications << ',' << cell.failures << '\n';
    }
  }
}

}  // namespace rfpca
