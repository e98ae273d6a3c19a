#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "rfpca/errors.hpp"

namespace rfpca {

// Equispaced interior evaluation points on an interval (a, b). The endpoints
// themselves are not evaluation points: with spacing dt = (b - a) / (m + 1)
// the points are a + dt, a + 2 dt, ..., a + m dt.
class Grid {
 public:
  Grid(double a, double b, int m);

  double a() const { return a_; }
  double b() const { return b_; }
  int size() const { return m_; }
  double dt() const { return dt_; }

  // i in [0, size())
  double point(int i) const { return a_ + (i + 1) * dt_; }
  std::vector<double> points() const;

  friend bool operator==(const Grid& x, const Grid& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
  }
  friend bool operator!=(const Grid& x, const Grid& y) { return !(x == y); }

 private:
  double a_;
  double b_;
  int m_;
  double dt_;
};

inline Grid make_grid(double a, double b, int m) { return Grid(a, b, m); }

// A function sampled on the points of a Grid.
struct Curve {
  Grid grid;
  std::vector<double> values;

  Curve(Grid g, std::vector<double> v);
};

// Samples `f` on the grid points.
template <class Fn>
Curve discretize(const Grid& grid, Fn&& f) {
  std::vector<double> values(static_cast<std::size_t>(grid.size()));
  for (int i = 0; i < grid.size(); ++i) values[static_cast<std::size_t>(i)] = f(grid.point(i));
  return Curve(grid, std::move(values));
}

// n curves sharing one grid, stored as rows of an n x m matrix.
class FunctionalSample {
 public:
  FunctionalSample(Grid grid, std::vector<std::vector<double>> rows);

  static FunctionalSample from_curves(const std::vector<Curve>& curves);

  const Grid& grid() const { return grid_; }
  int n() const { return static_cast<int>(rows_.size()); }
  const std::vector<double>& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  Curve curve(int i) const { return Curve(grid_, rows_[static_cast<std::size_t>(i)]); }

 private:
  Grid grid_;
  std::vector<std::vector<double>> rows_;
};

namespace detail {

inline void require_same_grid(const Grid& x, const Grid& y, const char* what) {
  if (x != y) throw GridMismatchError(std::string(what) + ": curves live on different grids");
}

}  // namespace detail

}  // namespace rfpca
