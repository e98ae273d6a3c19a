#pragma once

#include <vector>

#include "rfpca/grid.hpp"
#include "rfpca/projection_pursuit.hpp"

namespace rfpca {

enum class BasisKind { Fourier, BSpline };

// A finite basis evaluated on a grid. Fourier bases are parameterized by the
// harmonic count q_n and have dimension 2 q_n + 1, ordered
// {1, cos(pi u), sin(pi u), ..., cos(q_n pi u), sin(q_n pi u)} with u the
// interval coordinate mapped to [-1, 1]. B-spline bases are clamped cubic
// B-splines of the requested dimension on equispaced knots.
struct BasisSpec {
  BasisKind kind;
  int param;  // q_n (Fourier) or p_n (BSpline)
  Grid grid;

  int dimension() const { return kind == BasisKind::Fourier ? 2 * param + 1 : param; }

  static BasisSpec fourier(int qn, const Grid& grid);
  static BasisSpec bspline(int pn, const Grid& grid);
};

// Evaluates the basis functions on the grid, one curve each.
std::vector<Curve> build_basis(const BasisSpec& spec);

// Modified Gram-Schmidt under the grid inner product; throws
// RankDeficientBasisError when the input is numerically dependent.
std::vector<Curve> gram_schmidt(const std::vector<Curve>& basis);

// Matrix of inner products <X_i, onb_j>; the basis is checked to be
// orthonormal within 1e-6 first.
std::vector<std::vector<double>> inner_scores(const FunctionalSample& data,
                                              const std::vector<Curve>& onb);

// Sieve fit: CR scan on the inner-score vectors in Euclidean geometry,
// mapped back to curves through the orthonormalized basis.
PCFit fit_sieve(const FunctionalSample& data, const BasisSpec& basis, const ScaleSpec& scale,
                int q, Centering centering = Centering::SpatialMedian, int threads = 1);

}  // namespace rfpca
