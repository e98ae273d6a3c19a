#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rfpca/csv_io.hpp"
#include "rfpca/projection_pursuit.hpp"
#include "rfpca/simulate.hpp"

using namespace rfpca;

namespace {

FunctionalSample parse(const std::string& text) {
  std::istringstream in(text);
  return parse_sample_csv(in, "test");
}

}  // namespace

TEST_CASE("well-formed sample parses") {
  const FunctionalSample s = parse(
      "0.1,0.2,0.3,0.4,0.5\n"
      "1,2,3,4,5\n"
      "5,4,3,2,1\n"
      "0,0,0,0,0\n");
  CHECK(s.n() == 3);
  CHECK(s.grid().size() == 5);
  CHECK(s.grid().dt() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(s.grid().a() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(s.grid().b() == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(s.row(0)[4] == 5.0);
}

TEST_CASE("ragged row is reported with its location") {
  try {
    (void)parse("0.1,0.2,0.3,0.4,0.5\n1,2,3,4,5\n1,2,3,4\n");
    FAIL("expected CsvFormatError");
  } catch (const CsvFormatError& e) {
    CHECK(e.kind() == CsvFormatError::Kind::RaggedRow);
    CHECK(e.row() == 3);
  }
}

TEST_CASE("non-numeric cell is reported with its location") {
  try {
    (void)parse("0.1,0.2,0.3\n1,abc,3\n");
    FAIL("expected CsvFormatError");
  } catch (const CsvFormatError& e) {
    CHECK(e.kind() == CsvFormatError::Kind::NonNumericCell);
    CHECK(e.row() == 2);
    CHECK(e.column() == 2);
  }
  CHECK_THROWS_AS((void)parse("0.1,0.2,0.3\n1,inf,3\n"), CsvFormatError);
  CHECK_THROWS_AS((void)parse("0.1,0.2,0.3\n1,,3\n"), CsvFormatError);
}

TEST_CASE("non-equispaced grid is rejected") {
  try {
    (void)parse("0,0.1,0.25\n1,2,3\n");
    FAIL("expected CsvFormatError");
  } catch (const CsvFormatError& e) {
    CHECK(e.kind() == CsvFormatError::Kind::NonEquispacedGrid);
  }
  CHECK_THROWS_AS((void)parse("0.3,0.2,0.1\n1,2,3\n"), CsvFormatError);  // decreasing
  CHECK_THROWS_AS((void)parse("\n"), CsvFormatError);                    // empty
  CHECK_THROWS_AS((void)parse("0.1,0.2,0.3\n"), CsvFormatError);         // no rows
}

TEST_CASE("sample write/read round trip is bit exact") {
  SimModel model;
  model.n = 7;
  model.grid = make_grid(-1.0, 1.0, 21);
  model.seed = 4;
  const FunctionalSample original = gen_sample(model);

  std::ostringstream out;
  write_sample_csv(out, original.grid(), original.rows());
  std::istringstream in(out.str());
  const FunctionalSample back = parse_sample_csv(in, "roundtrip");

  REQUIRE(back.n() == original.n());
  for (int i = 0; i < original.n(); ++i) REQUIRE(back.row(i) == original.row(i));
  CHECK(back.grid().size() == original.grid().size());
  CHECK(back.grid().dt() == doctest::Approx(original.grid().dt()).epsilon(1e-12));
}

TEST_CASE("emit_fit writes the directions and diagnostics") {
  SimModel model;
  model.n = 25;
  model.grid = make_grid(-1.0, 1.0, 30);
  model.seed = 8;
  const FunctionalSample data = gen_sample(model);
  PPConfig cfg;
  cfg.scale = ScaleSpec::mscale();
  cfg.centering = Centering::SpatialMedian;
  cfg.q = 2;
  const PCFit f = fit(data, cfg);

  const std::string prefix = "emit_fit_test_tmp";
  const auto paths = emit_fit(f, prefix);
  REQUIRE(paths.size() == 2);

  const FunctionalSample dirs = ingest_csv(paths[0]);
  REQUIRE(dirs.n() == 2);
  for (int k = 0; k < 2; ++k)
    REQUIRE(dirs.row(k) == f.directions[static_cast<std::size_t>(k)].values);

  std::ifstream js(paths[1]);
  std::stringstream buf;
  buf << js.rdbuf();
  const std::string text = buf.str();
  CHECK(text.find("\"lambda\"") != std::string::npos);
  CHECK(text.find("\"mode\"") != std::string::npos);
  CHECK(text.find("mscale") != std::string::npos);

  std::remove(paths[0].c_str());
  std::remove(paths[1].c_str());
}

TEST_CASE("ingest_csv missing file") {
  CHECK_THROWS_AS((void)ingest_csv("definitely_not_here.csv"), Error);
}
