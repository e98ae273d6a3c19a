// Command line front end: fit / cv / simulate / scale-check.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rfpca/crossval.hpp"
#include "rfpca/csv_io.hpp"
#include "rfpca/parallel.hpp"
#include "rfpca/projection_pursuit.hpp"
#include "rfpca/scale.hpp"
#include "rfpca/sieve.hpp"
#include "rfpca/simulate.hpp"

namespace {

// Exit codes, also listed in --help:
//   0 success, 1 usage error, 2 I/O failure, 3 malformed CSV input,
//   4 invalid configuration, 5 numeric failure (degenerate data or
//   no convergence).
constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitCsv = 3;
constexpr int kExitConfig = 4;
constexpr int kExitNumeric = 5;

const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  command line usage error\n"
    "  2  I/O failure (cannot read or write a file)\n"
    "  3  malformed CSV input (ragged row, non-numeric cell, non-equispaced grid)\n"
    "  4  invalid configuration (bad sizes, weights, or flag combinations)\n"
    "  5  numeric failure (degenerate data, no convergence)\n";

struct ScaleFlags {
  std::string kind = "mscale";
  double c = -1.0;  // negative: use the kind's default
  double delta = 0.5;
  int max_iter = 100;
  double tol = 1e-9;

  rfpca::ScaleSpec resolve() const {
    rfpca::ScaleSpec s;
    if (kind == "sd")
      s = rfpca::ScaleSpec::sd();
    else if (kind == "mad")
      s = rfpca::ScaleSpec::mad();
    else if (kind == "mscale")
      s = rfpca::ScaleSpec::mscale();
    else
      throw std::invalid_argument("unknown scale kind: " + kind);
    if (c > 0.0) s.c = c;
    s.delta = delta;
    s.max_iter = max_iter;
    s.tol = tol;
    return s;
  }
};

void add_scale_flags(CLI::App* cmd, ScaleFlags& flags) {
  cmd->add_option("--scale", flags.kind, "Scale statistic: sd | mad | mscale")
      ->check(CLI::IsMember({"sd", "mad", "mscale"}))
      ->capture_default_str();
  cmd->add_option("--c", flags.c, "Tuning constant (default 1.56 for mscale, 1.4826 for mad)");
  cmd->add_option("--delta", flags.delta, "M-scale target level")->capture_default_str();
  cmd->add_option("--scale-max-iter", flags.max_iter, "M-scale iteration cap")
      ->capture_default_str();
  cmd->add_option("--scale-tol", flags.tol, "M-scale equation tolerance")->capture_default_str();
}

rfpca::Mode parse_mode(const std::string& mode) {
  if (mode == "raw") return rfpca::Mode::Raw;
  if (mode == "pen-scale") return rfpca::Mode::PenalizeScale;
  if (mode == "pen-norm") return rfpca::Mode::PenalizeNorm;
  if (mode == "sieve") return rfpca::Mode::Sieve;
  throw std::invalid_argument("unknown mode: " + mode);
}

rfpca::Centering parse_centering(const std::string& name) {
  if (name == "mean") return rfpca::Centering::Mean;
  if (name == "pmedian") return rfpca::Centering::PointwiseMedian;
  if (name == "smedian") return rfpca::Centering::SpatialMedian;
  throw std::invalid_argument("unknown centering: " + name);
}

// Smoothing weights are usually given as a * n^(-alpha); absolute --rho /
// --tau values override the pair form.
struct SmoothingFlags {
  double rho_abs = -1.0;
  double tau_abs = -1.0;
  double rho_a = -1.0;
  double rho_alpha = 3.0;
  double tau_a = -1.0;
  double tau_alpha = 3.0;

  double resolve_rho(int n) const {
    if (rho_abs >= 0.0) return rho_abs;
    if (rho_a >= 0.0) return rho_a * std::pow(static_cast<double>(n), -rho_alpha);
    return 0.0;
  }
  double resolve_tau(int n) const {
    if (tau_abs >= 0.0) return tau_abs;
    if (tau_a >= 0.0) return tau_a * std::pow(static_cast<double>(n), -tau_alpha);
    return 0.0;
  }
};

void add_smoothing_flags(CLI::App* cmd, SmoothingFlags& flags) {
  cmd->add_option("--rho", flags.rho_abs, "Scale-penalty weight (absolute)");
  cmd->add_option("--tau", flags.tau_abs, "Norm-penalty weight (absolute)");
  cmd->add_option("--rho-a", flags.rho_a, "Scale-penalty factor a in a*n^(-alpha)");
  cmd->add_option("--rho-alpha", flags.rho_alpha, "Scale-penalty exponent alpha")
      ->capture_default_str();
  cmd->add_option("--tau-a", flags.tau_a, "Norm-penalty factor a in a*n^(-alpha)");
  cmd->add_option("--tau-alpha", flags.tau_alpha, "Norm-penalty exponent alpha")
      ->capture_default_str();
}

std::vector<double> default_cv_factors() { return {0.05, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0}; }

std::vector<double> build_param_grid(const std::vector<double>& factors,
                                     const std::vector<double>& alphas, int n) {
  std::vector<double> grid;
  for (double alpha : alphas)
    for (double a : factors) grid.push_back(a * std::pow(static_cast<double>(n), -alpha));
  return grid;
}

rfpca::ScaleSpec cv_scale_about_zero(const std::string& choice, const rfpca::ScaleSpec& scale) {
  if (choice == "match") return scale.about_zero();
  if (choice == "sd") return rfpca::ScaleSpec::sd().about_zero();
  if (choice == "mad") return rfpca::ScaleSpec::mad().about_zero();
  if (choice == "mscale") return rfpca::ScaleSpec::mscale().about_zero();
  throw std::invalid_argument("unknown cv scale: " + choice);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw rfpca::Error("cannot open output file: " + path);
  out << text;
  if (!out.good()) throw rfpca::Error("failed writing " + path);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------- fit ----

struct FitArgs {
  std::string input;
  std::string output = "fit";
  ScaleFlags scale;
  SmoothingFlags smoothing;
  std::string mode = "raw";
  std::string centering = "smedian";
  std::string basis = "fourier";
  int qn = 15;
  int pn = 30;
  int q = 1;
  int threads = 0;
};

int run_fit(const FitArgs& args) {
  const rfpca::FunctionalSample data = rfpca::ingest_csv(args.input);
  const rfpca::Mode mode = parse_mode(args.mode);
  const int threads = args.threads > 0 ? args.threads : rfpca::detail::hardware_threads();

  rfpca::PCFit fit_result = [&] {
    if (mode == rfpca::Mode::Sieve) {
      const rfpca::BasisSpec basis = args.basis == "bspline"
                                         ? rfpca::BasisSpec::bspline(args.pn, data.grid())
                                         : rfpca::BasisSpec::fourier(args.qn, data.grid());
      return rfpca::fit_sieve(data, basis, args.scale.resolve(), args.q,
                              parse_centering(args.centering), threads);
    }
    rfpca::PPConfig cfg;
    cfg.scale = args.scale.resolve();
    cfg.mode = mode;
    cfg.centering = parse_centering(args.centering);
    cfg.q = args.q;
    cfg.threads = threads;
    if (mode == rfpca::Mode::PenalizeScale) cfg.rho = args.smoothing.resolve_rho(data.n());
    if (mode == rfpca::Mode::PenalizeNorm) cfg.tau = args.smoothing.resolve_tau(data.n());
    return rfpca::fit(data, cfg);
  }();

  if (fit_result.components() == 0)
    throw rfpca::AllDegenerateError("fit produced no components: every residual is numerically zero");
  const auto paths = rfpca::emit_fit(fit_result, args.output);
  std::cout << "wrote " << paths[0] << " and " << paths[1] << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- cv ----

struct CvArgs {
  std::string input;
  std::string output = "cv";
  ScaleFlags scale;
  std::string mode = "pen-scale";
  std::string centering = "smedian";
  std::string cv_scale = "match";
  int kfold = 4;
  int ell = 1;
  std::vector<double> grid_a = default_cv_factors();
  std::vector<double> grid_alpha = {3.0};
  std::uint64_t seed = 0;
  int threads = 0;
};

int run_cv(const CvArgs& args) {
  const rfpca::FunctionalSample data = rfpca::ingest_csv(args.input);
  const rfpca::Mode mode = parse_mode(args.mode);
  if (mode != rfpca::Mode::PenalizeScale && mode != rfpca::Mode::PenalizeNorm)
    throw std::invalid_argument("cv tunes pen-scale or pen-norm fits only");

  rfpca::CVConfig cv;
  cv.ell = args.ell;
  cv.kfold = args.kfold;
  cv.param_grid = build_param_grid(args.grid_a, args.grid_alpha, data.n());
  cv.scale_about_zero = cv_scale_about_zero(args.cv_scale, args.scale.resolve());
  cv.seed = args.seed;
  cv.target = mode == rfpca::Mode::PenalizeNorm ? rfpca::CVTarget::Tau : rfpca::CVTarget::Rho;
  cv.threads = args.threads > 0 ? args.threads : rfpca::detail::hardware_threads();

  rfpca::PPConfig tmpl;
  tmpl.scale = args.scale.resolve();
  tmpl.centering = parse_centering(args.centering);

  const rfpca::CVResult result =
      args.kfold == 0 ? rfpca::rcv_loo(data, cv, tmpl) : rfpca::rcv_kfold(data, cv, tmpl);

  std::ostringstream table;
  table << "param,criterion,fit_failures,excluded\n";
  for (const rfpca::CVEntry& e : result.table)
    table << format_double(e.param) << ',' << format_double(e.criterion) << ',' << e.fit_failures
          << ',' << (e.excluded ? 1 : 0) << '\n';
  write_text_file(args.output + ".cv.csv", table.str());

  nlohmann::json j;
  j["selected"] = result.selected;
  j["target"] = mode == rfpca::Mode::PenalizeNorm ? "tau" : "rho";
  j["kfold"] = args.kfold;
  j["ell"] = args.ell;
  j["seed"] = args.seed;
  write_text_file(args.output + ".cv.json", j.dump(2) + "\n");
  std::cout << "selected " << format_double(result.selected) << "\n";
  return kExitOk;
}

// ----------------------------------------------------------- simulate ----

struct SimulateArgs {
  std::string model = "C0";
  int nr = 100;
  int n = 100;
  int m = 50;
  std::uint64_t seed = 0;
  std::vector<std::string> scales = {"mscale"};
  std::vector<std::string> modes = {"pen-scale"};
  std::string centering = "auto";
  std::string cv_scale = "match";
  SmoothingFlags smoothing;
  bool fixed_smoothing = false;
  int kfold = 4;
  int ell = 1;
  std::vector<double> grid_a = default_cv_factors();
  std::vector<double> grid_alpha = {3.0, 4.0};
  std::string basis = "fourier";
  int qn = 15;
  int pn = 30;
  int q = 3;
  int threads = 0;
  std::string output = "mc";
};

int run_simulate(const SimulateArgs& args) {
  rfpca::MCRequest req;
  rfpca::SimModel model;
  model.kind = rfpca::sim_model_from_string(args.model);
  model.n = args.n;
  model.grid = rfpca::make_grid(-1.0, 1.0, args.m);
  req.models = {model};
  req.replications = args.nr;
  req.seed = args.seed;
  req.components = args.q;
  req.threads = args.threads > 0 ? args.threads : rfpca::detail::hardware_threads();

  for (const std::string& scale_name : args.scales) {
    for (const std::string& mode_name : args.modes) {
      ScaleFlags sf;
      sf.kind = scale_name;
      rfpca::EstimatorSpec est;
      est.scale = sf.resolve();
      est.mode = parse_mode(mode_name);
      est.label = scale_name + "/" + mode_name;
      est.centering = args.centering == "auto"
                          ? (est.scale.kind == rfpca::ScaleKind::SD
                                 ? rfpca::Centering::Mean
                                 : rfpca::Centering::SpatialMedian)
                          : parse_centering(args.centering);
      if (est.mode == rfpca::Mode::PenalizeScale || est.mode == rfpca::Mode::PenalizeNorm) {
        if (args.fixed_smoothing) {
          est.smoothing.kind = rfpca::SmoothingSelection::Kind::Fixed;
          est.smoothing.fixed_value = est.mode == rfpca::Mode::PenalizeScale
                                          ? args.smoothing.resolve_rho(args.n)
                                          : args.smoothing.resolve_tau(args.n);
        } else {
          est.smoothing.kind = rfpca::SmoothingSelection::Kind::KFoldCV;
          est.smoothing.grid = build_param_grid(args.grid_a, args.grid_alpha, args.n);
          est.smoothing.kfold = args.kfold;
          est.smoothing.ell = args.ell;
        }
      }
      if (est.mode == rfpca::Mode::Sieve) {
        est.basis_kind =
            args.basis == "bspline" ? rfpca::BasisKind::BSpline : rfpca::BasisKind::Fourier;
        est.basis_param = args.basis == "bspline" ? args.pn : args.qn;
      }
      req.estimators.push_back(std::move(est));
    }
  }

  const rfpca::MCSummary summary = rfpca::run_monte_carlo(req);

  std::ostringstream csv;
  rfpca::write_mc_csv(summary, csv);
  write_text_file(args.output + ".csv", csv.str());

  nlohmann::json j;
  j["seed"] = summary.seed;
  j["replications"] = summary.replications;
  j["model"] = args.model;
  j["n"] = args.n;
  j["m"] = args.m;
  j["cells"] = nlohmann::json::array();
  for (const rfpca::MCCell& cell : summary.cells) {
    nlohmann::json c;
    c["model"] = cell.model;
    c["estimator"] = cell.estimator;
    c["scale"] = rfpca::to_string(cell.scale_kind);
    c["mode"] = rfpca::to_string(cell.mode);
    c["mean_param"] = cell.mean_param;
    c["mean_D"] = {cell.mean_d[0], cell.mean_d[1], cell.mean_d[2]};
    c["replications"] = cell.replications;
    c["failures"] = cell.failures;
    c["per_rep_D"] = cell.per_rep_d;
    c["per_rep_param"] = cell.per_rep_param;
    j["cells"].push_back(std::move(c));
  }
  write_text_file(args.output + ".json", j.dump(2) + "\n");
  std::cout << "wrote " << args.output << ".csv and " << args.output << ".json\n";
  return kExitOk;
}

// -------------------------------------------------------- scale-check ----

struct ScaleCheckArgs {
  std::string input;
  ScaleFlags scale;
  bool about_zero = false;
};

int run_scale_check(const ScaleCheckArgs& args) {
  std::ifstream in(args.input);
  if (!in) throw rfpca::Error("cannot open input file: " + args.input);
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size() || !std::isfinite(v))
        throw rfpca::CsvFormatError(rfpca::CsvFormatError::Kind::NonNumericCell,
                                    "non-numeric value: " + token);
      values.push_back(v);
    } catch (const std::invalid_argument&) {
      throw rfpca::CsvFormatError(rfpca::CsvFormatError::Kind::NonNumericCell,
                                  "non-numeric value: " + token);
    }
  }
  if (values.empty())
    throw rfpca::CsvFormatError(rfpca::CsvFormatError::Kind::Empty, "no values in " + args.input);

  const rfpca::ScaleSpec spec = args.scale.resolve();
  nlohmann::json j;
  j["kind"] = rfpca::to_string(spec.kind);
  j["n"] = values.size();
  j["about_zero"] = args.about_zero;
  if (spec.kind == rfpca::ScaleKind::MScale) {
    rfpca::ScaleSpec use = spec;
    if (args.about_zero) use.location = rfpca::ScaleLocation::Zero;
    const rfpca::MScaleResult r = rfpca::m_scale(values, use);
    j["sigma"] = r.sigma;
    j["converged"] = r.converged;
    j["degenerate"] = r.degenerate;
    j["iterations"] = r.iterations;
    j["equation_residual"] = r.equation_residual;
  } else {
    j["sigma"] = args.about_zero ? rfpca::scale_about_zero(values, spec)
                                 : rfpca::scale_estimate(values, spec);
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust functional principal components by projection pursuit"};
  app.footer(kExitCodeHelp);
  app.set_config("--config", "", "Read options from a config file");
  app.require_subcommand(0, 1);
  std::string dump_config_path;
  app.add_option("--dump-config", dump_config_path,
                 "Write the resolved configuration to a file and continue")
      ->configurable(false);

  FitArgs fit_args;
  CLI::App* fit_cmd = app.add_subcommand("fit", "Fit robust principal directions to a CSV sample");
  fit_cmd->configurable(true);
  fit_cmd->add_option("--input", fit_args.input, "Input curves CSV")->required();
  fit_cmd->add_option("--output", fit_args.output, "Output path prefix")->capture_default_str();
  add_scale_flags(fit_cmd, fit_args.scale);
  add_smoothing_flags(fit_cmd, fit_args.smoothing);
  fit_cmd->add_option("--mode", fit_args.mode, "raw | pen-scale | pen-norm | sieve")
      ->check(CLI::IsMember({"raw", "pen-scale", "pen-norm", "sieve"}))
      ->capture_default_str();
  fit_cmd->add_option("--center", fit_args.centering, "mean | pmedian | smedian")
      ->check(CLI::IsMember({"mean", "pmedian", "smedian"}))
      ->capture_default_str();
  fit_cmd->add_option("--basis", fit_args.basis, "fourier | bspline (sieve mode)")
      ->check(CLI::IsMember({"fourier", "bspline"}))
      ->capture_default_str();
  fit_cmd->add_option("--qn", fit_args.qn, "Fourier harmonic count")->capture_default_str();
  fit_cmd->add_option("--pn", fit_args.pn, "B-spline basis dimension")->capture_default_str();
  fit_cmd->add_option("--q", fit_args.q, "Number of components")->capture_default_str();
  fit_cmd->add_option("--threads", fit_args.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  CvArgs cv_args;
  CLI::App* cv_cmd = app.add_subcommand("cv", "Cross-validate the smoothing parameter");
  cv_cmd->configurable(true);
  cv_cmd->add_option("--input", cv_args.input, "Input curves CSV")->required();
  cv_cmd->add_option("--output", cv_args.output, "Output path prefix")->capture_default_str();
  add_scale_flags(cv_cmd, cv_args.scale);
  cv_cmd->add_option("--mode", cv_args.mode, "pen-scale | pen-norm")
      ->check(CLI::IsMember({"pen-scale", "pen-norm"}))
      ->capture_default_str();
  cv_cmd->add_option("--center", cv_args.centering, "mean | pmedian | smedian")
      ->check(CLI::IsMember({"mean", "pmedian", "smedian"}))
      ->capture_default_str();
  cv_cmd->add_option("--cv-scale", cv_args.cv_scale,
                     "Scale about zero for the criterion: match | sd | mad | mscale")
      ->check(CLI::IsMember({"match", "sd", "mad", "mscale"}))
      ->capture_default_str();
  cv_cmd->add_option("--kfold", cv_args.kfold, "Number of folds (0 = leave-one-out)")
      ->capture_default_str();
  cv_cmd->add_option("--ell", cv_args.ell, "Components retained by the criterion")
      ->capture_default_str();
  cv_cmd->add_option("--grid-a", cv_args.grid_a, "Grid factors a in a*n^(-alpha)")
      ->delimiter(',')
      ->capture_default_str();
  cv_cmd->add_option("--grid-alpha", cv_args.grid_alpha, "Grid exponents alpha")
      ->delimiter(',')
      ->capture_default_str();
  cv_cmd->add_option("--seed", cv_args.seed, "Fold partition seed")->capture_default_str();
  cv_cmd->add_option("--threads", cv_args.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  SimulateArgs sim_args;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Run a seeded Monte Carlo study");
  sim_cmd->configurable(true);
  sim_cmd->add_option("--model", sim_args.model, "C0 | C2 | C3a | C3b | C23 | Cauchy")
      ->capture_default_str();
  sim_cmd->add_option("--nr", sim_args.nr, "Replications")->capture_default_str();
  sim_cmd->add_option("--n", sim_args.n, "Curves per replication")->capture_default_str();
  sim_cmd->add_option("--m", sim_args.m, "Grid size")->capture_default_str();
  sim_cmd->add_option("--seed", sim_args.seed, "Master seed")->capture_default_str();
  sim_cmd->add_option("--scale", sim_args.scales, "Scale kinds (repeat or comma separate)")
      ->delimiter(',')
      ->capture_default_str();
  sim_cmd->add_option("--mode", sim_args.modes, "Estimator modes (repeat or comma separate)")
      ->delimiter(',')
      ->capture_default_str();
  sim_cmd->add_option("--center", sim_args.centering,
                      "mean | pmedian | smedian | auto (mean for sd, smedian otherwise)")
      ->check(CLI::IsMember({"mean", "pmedian", "smedian", "auto"}))
      ->capture_default_str();
  add_smoothing_flags(sim_cmd, sim_args.smoothing);
  sim_cmd->add_flag("--fixed-smoothing", sim_args.fixed_smoothing,
                    "Use the --rho/--tau values instead of K-fold selection");
  sim_cmd->add_option("--kfold", sim_args.kfold, "Folds for the per-replication selection")
      ->capture_default_str();
  sim_cmd->add_option("--ell", sim_args.ell, "Components retained by the criterion")
      ->capture_default_str();
  sim_cmd->add_option("--grid-a", sim_args.grid_a, "Selection grid factors")
      ->delimiter(',')
      ->capture_default_str();
  sim_cmd->add_option("--grid-alpha", sim_args.grid_alpha, "Selection grid exponents")
      ->delimiter(',')
      ->capture_default_str();
  sim_cmd->add_option("--basis", sim_args.basis, "fourier | bspline (sieve mode)")
      ->check(CLI::IsMember({"fourier", "bspline"}))
      ->capture_default_str();
  sim_cmd->add_option("--qn", sim_args.qn, "Fourier harmonic count")->capture_default_str();
  sim_cmd->add_option("--pn", sim_args.pn, "B-spline basis dimension")->capture_default_str();
  sim_cmd->add_option("--q", sim_args.q, "Fitted components per replication")
      ->capture_default_str();
  sim_cmd->add_option("--threads", sim_args.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  sim_cmd->add_option("--output", sim_args.output, "Output path prefix")->capture_default_str();

  ScaleCheckArgs sc_args;
  CLI::App* sc_cmd = app.add_subcommand("scale-check", "Compute a scale statistic for a list of numbers");
  sc_cmd->configurable(true);
  sc_cmd->add_option("--input", sc_args.input, "Text file with one value per whitespace token")
      ->required();
  add_scale_flags(sc_cmd, sc_args.scale);
  sc_cmd->add_flag("--about-zero", sc_args.about_zero, "Do not remove a location first");

  CLI11_PARSE(app, argc, argv);

  try {
    // Only options that were actually set are written: unset numeric options
    // would otherwise read back as empty strings.
    if (!dump_config_path.empty())
      write_text_file(dump_config_path, app.config_to_str(false, true));
    if (fit_cmd->parsed()) return run_fit(fit_args);
    if (cv_cmd->parsed()) return run_cv(cv_args);
    if (sim_cmd->parsed()) return run_simulate(sim_args);
    if (sc_cmd->parsed()) return run_scale_check(sc_args);
    std::cout << app.help() << "\n";
    return kExitOk;
  } catch (const rfpca::CsvFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCsv;
  } catch (const rfpca::AllDegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const rfpca::TooFewPointsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const rfpca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
