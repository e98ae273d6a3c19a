#include "rfpca/csv_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rfpca/simulate.hpp"

namespace rfpca {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split_csv_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

double parse_cell(const std::string& cell, int row, int column) {
  errno = 0;
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  while (end != nullptr && (*end == ' ' || *end == '\t')) ++end;
  const char* p = begin;
  while (*p == ' ' || *p == '\t') ++p;
  if (end == begin || *p == '\0' || (end != nullptr && *end != '\0') || errno == ERANGE ||
      !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "non-numeric cell at row " << row << ", column " << column << ": '" << cell << "'";
    throw CsvFormatError(CsvFormatError::Kind::NonNumericCell, msg.str(), row, column);
  }
  return value;
}

}  // namespace

FunctionalSample parse_sample_csv(std::istream& in, const std::string& name) {
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string::npos)
    lines.pop_back();
  if (lines.empty())
    throw CsvFormatError(CsvFormatError::Kind::Empty, name + ": empty input");

  const std::vector<std::string> header = split_csv_line(lines.front());
  const int m = static_cast<int>(header.size());
  std::vector<double> points(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c)
    points[static_cast<std::size_t>(c)] = parse_cell(header[static_cast<std::size_t>(c)], 1, c + 1);

  if (m < 3)
    throw CsvFormatError(CsvFormatError::Kind::NonEquispacedGrid,
                         name + ": grid needs at least 3 points", 1, 0);
  const double dt = points[1] - points[0];
  if (!(dt > 0.0))
    throw CsvFormatError(CsvFormatError::Kind::NonEquispacedGrid,
                         name + ": grid points must be strictly increasing", 1, 0);
  for (int c = 0; c + 1 < m; ++c) {
    const double step = points[static_cast<std::size_t>(c) + 1] - points[static_cast<std::size_t>(c)];
    if (std::abs(step - dt) > 1e-9) {
      std::ostringstream msg;
      msg << name << ": grid is not equispaced near column " << (c + 2) << " (spacing " << step
          << " vs " << dt << ")";
      throw CsvFormatError(CsvFormatError::Kind::NonEquispacedGrid, msg.str(), 1, c + 2);
    }
  }
  const Grid grid(points.front() - dt, points.back() + dt, m);

  std::vector<std::vector<double>> rows;
  rows.reserve(lines.size() - 1);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::vector<std::string> cells = split_csv_line(lines[r]);
    const int row_number = static_cast<int>(r) + 1;
    if (static_cast<int>(cells.size()) != m) {
      std::ostringstream msg;
      msg << name << ": row " << row_number << " has " << cells.size() << " cells, expected " << m;
      throw CsvFormatError(CsvFormatError::Kind::RaggedRow, msg.str(), row_number, 0);
    }
    std::vector<double> values(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c)
      values[static_cast<std::size_t>(c)] =
          parse_cell(cells[static_cast<std::size_t>(c)], row_number, c + 1);
    rows.push_back(std::move(values));
  }
  if (rows.empty())
    throw CsvFormatError(CsvFormatError::Kind::Empty, name + ": no curve rows after the header");
  return FunctionalSample(grid, std::move(rows));
}

FunctionalSample ingest_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path);
  return parse_sample_csv(in, path);
}

void write_sample_csv(std::ostream& os, const Grid& grid,
                      const std::vector<std::vector<double>>& rows) {
  for (int i = 0; i < grid.size(); ++i) {
    if (i) os << ',';
    os << fmt(grid.point(i));
  }
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << fmt(row[i]);
    }
    os << '\n';
  }
}

std::string fit_json(const PCFit& fit) {
  nlohmann::json j;
  j["mode"] = to_string(fit.mode);
  j["scale"] = {{"kind", to_string(fit.scale.kind)},
                {"c", fit.scale.c},
                {"delta", fit.scale.delta},
                {"max_iter", fit.scale.max_iter},
                {"tol", fit.scale.tol}};
  j["rho"] = fit.rho;
  j["tau"] = fit.tau;
  j["centering"] = to_string(fit.centering);
  j["requested_components"] = fit.requested_components;
  j["components"] = fit.components();
  if (fit.basis_dim > 0) j["basis_dim"] = fit.basis_dim;
  j["lambda"] = fit.values;
  j["attained_index"] = fit.attained_index;
  j["argmax_candidate"] = fit.argmax_candidate;
  j["degenerate"] = fit.degenerate;
  j["scale_nonconvergence"] = fit.scale_nonconvergence;
  j["grid"] = {{"a", fit.center.grid.a()}, {"b", fit.center.grid.b()}, {"m", fit.center.grid.size()}};
  j["center"] = fit.center.values;
  return j.dump(2);
}

std::vector<std::string> emit_fit(const PCFit& fit, const std::string& prefix) {
  const std::string csv_path = prefix + ".directions.csv";
  const std::string json_path = prefix + ".json";

  std::ofstream csv(csv_path);
  if (!csv) throw Error("cannot open output file: " + csv_path);
  std::vector<std::vector<double>> rows;
  rows.reserve(fit.directions.size());
  for (const Curve& d : fit.directions) rows.push_back(d.values);
  write_sample_csv(csv, fit.center.grid, rows);
  if (!csv.good()) throw Error("failed writing " + csv_path);

  std::ofstream js(json_path);
  if (!js) throw Error("cannot open output file: " + json_path);
  js << fit_json(fit) << '\n';
  if (!js.good()) throw Error("failed writing " + json_path);
  return {csv_path, json_path};
}

}  // namespace rfpca
