#pragma once

#include <vector>

#include "rfpca/core.hpp"
#include "rfpca/grid.hpp"
#include "rfpca/scale.hpp"

namespace rfpca {

enum class Mode { Raw, PenalizeScale, PenalizeNorm, Sieve };
enum class Centering { Mean, PointwiseMedian, SpatialMedian };
enum class SignConvention { LargestCoordinatePositive };

struct PPConfig {
  ScaleSpec scale{};
  Mode mode = Mode::Raw;
  double rho = 0.0;  // PenalizeScale weight
  double tau = 0.0;  // PenalizeNorm weight
  int q = 1;
  Centering centering = Centering::SpatialMedian;
  SignConvention sign = SignConvention::LargestCoordinatePositive;
  int threads = 1;

  void validate() const;
};

// Result of a projection-pursuit fit. Directions are unit-norm in the plain
// inner product (Raw, PenalizeScale, Sieve) or in <.,.>_tau (PenalizeNorm),
// and pairwise orthogonal in the same geometry. values[k] is the squared
// scale of the data projections onto directions[k].
struct PCFit {
  std::vector<Curve> directions;
  std::vector<double> values;

  Mode mode = Mode::Raw;
  ScaleSpec scale{};
  double rho = 0.0;
  double tau = 0.0;
  Centering centering = Centering::SpatialMedian;
  int requested_components = 0;
  int basis_dim = 0;  // sieve fits only

  Curve center;

  // Candidate-scan bookkeeping, one entry per extracted component.
  std::vector<double> attained_index;                  // max index value
  std::vector<int> argmax_candidate;                   // data row of the argmax
  std::vector<std::vector<double>> candidate_indices;  // index per kept candidate
  std::vector<std::vector<int>> candidate_rows;        // data row per kept candidate

  bool degenerate = false;          // ran out of nonzero residuals early
  int scale_nonconvergence = 0;     // M-scale evaluations that hit max_iter

  int components() const { return static_cast<int>(directions.size()); }
};

// Candidate directions: each residual curve normalized to unit ip-norm.
// Residuals with ip-norm below 1e-12 are skipped; throws AllDegenerateError
// when nothing survives.
std::vector<Curve> candidate_set(const FunctionalSample& residuals, const InnerProduct& ip = {});

// Projection index of direction `a` for the given data and configuration:
// the scale of the centered-data projections (Raw, PenalizeNorm), or its
// square minus rho * roughness(a) (PenalizeScale). `a` is used as given.
double pp_index(const Curve& a, const FunctionalSample& data, const PPConfig& config);

// CR candidate-scan fit of the first `config.q` robust principal directions.
PCFit fit(const FunctionalSample& data, const PPConfig& config);

// Scores z[i][k] = <directions[k], X_i - center> in the plain inner product.
std::vector<std::vector<double>> scores(const FunctionalSample& data, const PCFit& fit);

namespace detail {

// CR engine on raw coefficient rows; `w` is the inner-product weight and
// `dt` the grid spacing used by the roughness penalty. The sieve fit reuses
// it with w = 1 on inner-score vectors.
struct EngineConfig {
  ScaleSpec scale{};
  Mode mode = Mode::Raw;
  double rho = 0.0;
  double tau = 0.0;
  int q = 1;
  double w = 1.0;
  double dt = 1.0;
  int threads = 1;
};

struct EngineFit {
  std::vector<std::vector<double>> directions;
  std::vector<double> values;
  std::vector<double> attained_index;
  std::vector<int> argmax_candidate;
  std::vector<std::vector<double>> candidate_indices;
  std::vector<std::vector<int>> candidate_rows;
  bool degenerate = false;
  int scale_nonconvergence = 0;
};

EngineFit cr_fit(const std::vector<std::vector<double>>& centered, const EngineConfig& cfg);

// Centering of raw rows in the geometry with weight w.
std::vector<double> center_rows(const std::vector<std::vector<double>>& rows, Centering centering,
                                double w);

// Applies the largest-coordinate-positive sign convention in place.
void fix_sign(std::vector<double>& values);

}  // namespace detail

}  // namespace rfpca
