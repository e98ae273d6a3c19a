#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rfpca/grid.hpp"
#include "rfpca/projection_pursuit.hpp"

namespace rfpca {

// Reads a curve sample: header row of equispaced grid points, one curve per
// data row. Throws CsvFormatError with the offending row/column, or Error on
// IO failure.
FunctionalSample ingest_csv(const std::string& path);
FunctionalSample parse_sample_csv(std::istream& in, const std::string& name);

// Writes grid header plus rows with round-trip-safe (17 significant digit)
// formatting.
void write_sample_csv(std::ostream& os, const Grid& grid,
                      const std::vector<std::vector<double>>& rows);

// Writes <prefix>.directions.csv (one row per direction) and <prefix>.json
// (principal values and diagnostics). Returns the two paths written.
std::vector<std::string> emit_fit(const PCFit& fit, const std::string& prefix);

// JSON text of the fit diagnostics (also embedded by emit_fit).
std::string fit_json(const PCFit& fit);

}  // namespace rfpca
