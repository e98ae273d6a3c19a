#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rfpca/crossval.hpp"
#include "rfpca/grid.hpp"
#include "rfpca/sieve.hpp"

namespace rfpca {

enum class SimModelKind { C0, C2, C3a, C3b, C23, Cauchy };

SimModelKind sim_model_from_string(const std::string& name);
std::string to_string(SimModelKind kind);

// Karhunen-Loeve sample generator: X_i = Z_i1 phi_1 + Z_i2 phi_2 + Z_i3 phi_3
// with sin/cos directions on (-1, 1) and score laws picked by `kind`.
// The central model C0 draws independent centered normals with standard
// deviations (4, 2, 1); the contaminated models mix in a point-mass-like
// normal component; Cauchy draws an elliptical Cauchy score vector.
struct SimModel {
  SimModelKind kind = SimModelKind::C0;
  double sigma1 = 4.0;
  double sigma2 = 2.0;
  double sigma3 = 1.0;
  int n = 100;
  Grid grid = Grid(-1.0, 1.0, 50);
  std::uint64_t seed = 0;
};

// The target directions sin(4 pi x), cos(7 pi x), cos(15 pi x), each
// normalized to unit grid norm.
std::array<Curve, 3> true_directions(const Grid& grid);

// Unnormalized direction functions, exposed for tests.
double phi1_raw(double t);
double phi2_raw(double t);
double phi3_raw(double t);

// n x 3 score matrix drawn from the model's law, seeded and reproducible.
std::vector<std::array<double, 3>> gen_scores(const SimModel& model);

FunctionalSample gen_sample(const SimModel& model);

// Sign-minimized squared distance between the normalized estimate and a
// unit-norm target: min_s ||s e/||e|| - truth||^2 = 2 - 2 |<e/||e||, truth>|.
double direction_error(const Curve& estimate, const Curve& truth);

// How the smoothing parameter of a Monte Carlo estimator is chosen.
struct SmoothingSelection {
  enum class Kind { None, Fixed, KFoldCV };
  Kind kind = Kind::None;
  double fixed_value = 0.0;
  std::vector<double> grid;
  int kfold = 4;
  int ell = 1;
};

// One estimator column of the study: scale x mode x centering, plus the
// smoothing-parameter rule and the basis for sieve fits.
struct EstimatorSpec {
  std::string label;
  ScaleSpec scale{};
  Mode mode = Mode::Raw;
  Centering centering = Centering::SpatialMedian;
  SmoothingSelection smoothing{};
  BasisKind basis_kind = BasisKind::Fourier;
  int basis_param = 15;  // q_n (Fourier) or p_n (BSpline)

  // Scale-about-zero statistic for the CV criterion, matching the
  // estimator's scale family.
  ScaleSpec cv_scale_about_zero() const { return scale.about_zero(); }
};

struct MCRequest {
  std::vector<SimModel> models;
  std::vector<EstimatorSpec> estimators;
  int replications = 100;
  std::uint64_t seed = 0;
  int components = 3;
  int threads = 1;
};

struct MCCell {
  std::string model;
  std::string estimator;
  ScaleKind scale_kind;
  Mode mode;
  double mean_param = 0.0;               // mean selected / fixed smoothing weight
  std::array<double, 3> mean_d{};        // mean D_j over successful replications
  int replications = 0;                  // successful replications
  int failures = 0;
  std::vector<std::array<double, 3>> per_rep_d;  // indexed by replication, failures as NaN
  std::vector<double> per_rep_param;
};

struct MCSummary {
  std::vector<MCCell> cells;
  int replications = 0;
  std::uint64_t seed = 0;
};

MCSummary run_monte_carlo(const MCRequest& request);

// CSV with columns model,estimator,scale,mode,param,j,mean_Dj,NR,failures.
void write_mc_csv(const MCSummary& summary, std::ostream& os);

std::string to_string(ScaleKind kind);
std::string to_string(Mode mode);
std::string to_string(Centering centering);

}  // namespace rfpca
