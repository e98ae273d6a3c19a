#include "rfpca/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace rfpca {

Grid::Grid(double a, double b, int m) : a_(a), b_(b), m_(m) {
  if (!(a < b)) throw std::invalid_argument("Grid: requires a < b");
  if (m < 3) throw std::invalid_argument("Grid: requires at least 3 points");
  if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("Grid: endpoints must be finite");
  dt_ = (b - a) / (m + 1);
}

std::vector<double> Grid::points() const {
  std::vector<double> p(static_cast<std::size_t>(m_));
  for (int i = 0; i < m_; ++i) p[static_cast<std::size_t>(i)] = point(i);
  return p;
}

Curve::Curve(Grid g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.size())
    throw std::invalid_argument("Curve: value count does not match the grid");
  for (double x : values)
    if (!std::isfinite(x)) throw std::invalid_argument("Curve: values must be finite");
}

FunctionalSample::FunctionalSample(Grid grid, std::vector<std::vector<double>> rows)
    : grid_(grid), rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("FunctionalSample: needs at least one curve");
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != grid_.size())
      throw std::invalid_argument("FunctionalSample: row length does not match the grid");
    for (double x : r)
      if (!std::isfinite(x)) throw std::invalid_argument("FunctionalSample: values must be finite");
  }
}

FunctionalSample FunctionalSample::from_curves(const std::vector<Curve>& curves) {
  if (curves.empty()) throw std::invalid_argument("FunctionalSample: needs at least one curve");
  std::vector<std::vector<double>> rows;
  rows.reserve(curves.size());
  for (const Curve& c : curves) {
    detail::require_same_grid(c.grid, curves.front().grid, "FunctionalSample::from_curves");
    rows.push_back(c.values);
  }
  return FunctionalSample(curves.front().grid, std::move(rows));
}

}  // namespace rfpca
