#include <doctest.h>

#include <cmath>
#include <vector>

#include "rfpca/errors.hpp"
#include "rfpca/rng.hpp"
#include "rfpca/scale.hpp"
#include "support/oracles.hpp"

using namespace rfpca;

TEST_CASE("Beaton-Tukey score values") {
  CHECK(chi_beaton_tukey(0.0, 1.56) == 0.0);
  CHECK(chi_beaton_tukey(1.56, 1.56) == 1.0);
  CHECK(chi_beaton_tukey(-1.56, 1.56) == 1.0);
  CHECK(chi_beaton_tukey(10.0, 1.56) == 1.0);
  // 3 (1/2)^2 - 3 (1/2)^4 + (1/2)^6
  CHECK(chi_beaton_tukey(0.78, 1.56) == doctest::Approx(0.578125).epsilon(1e-14));
}

TEST_CASE("Beaton-Tukey score shape") {
  const double c = 1.56;
  double prev = -1.0;
  for (int i = 0; i <= 400; ++i) {
    const double y = 2.0 * c * i / 400.0;
    const double v = chi_beaton_tukey(y, c);
    CHECK(v == chi_beaton_tukey(-y, c));  // even
    CHECK(v >= prev - 1e-15);             // nondecreasing on [0, inf)
    CHECK(v <= 1.0);
    prev = v;
  }
}

TEST_CASE("score derivative matches finite differences inside (-c, c)") {
  const double c = 1.56;
  const double h = 1e-6;
  for (int i = -40; i <= 40; ++i) {
    const double y = 0.95 * c * i / 40.0;
    const double fd = (chi_beaton_tukey(y + h, c) - chi_beaton_tukey(y - h, c)) / (2.0 * h);
    CHECK(chi_beaton_tukey_deriv(y, c) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("weight function") {
  const double c = 1.56;
  CHECK(weight_chi(0.0, c) == doctest::Approx(6.0 / (c * c)).epsilon(1e-14));
  // saturated score over y^2
  CHECK(weight_chi(10.0, c) == doctest::Approx(0.01).epsilon(1e-14));
  // near zero the ratio chi(y)/y^2 tends to 3/c^2
  CHECK(weight_chi(1e-8, c) == doctest::Approx(3.0 / (c * c)).epsilon(1e-10));
}

TEST_CASE("sd examples") {
  CHECK(sd(std::vector<double>{5.0, 5.0, 5.0}) == 0.0);
  CHECK(sd(std::vector<double>{-1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sd(std::vector<double>{1.0, 2.0, 3.0, 4.0}) ==
        doctest::Approx(std::sqrt(1.25)).epsilon(1e-14));
  CHECK_THROWS_AS((void)sd(std::vector<double>{1.0}), TooFewPointsError);
}

TEST_CASE("mad examples") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
  CHECK(mad(v, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mad(v, 1.4826) == doctest::Approx(1.4826).epsilon(1e-14));
  CHECK(mad(std::vector<double>{7.0, 7.0, 7.0, 7.0}) == 0.0);
  CHECK_THROWS_AS((void)mad(std::vector<double>{1.0}), TooFewPointsError);
}

TEST_CASE("median conventions") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 3.0, 2.0}) == 2.5);
  CHECK(median({5.0}) == 5.0);
}

TEST_CASE("m_scale on {-1, 1} matches the scalar-equation oracle") {
  // With mu = 0 both standardized residuals are +-1/sigma, so sigma solves
  // chi_c(1/sigma) = delta. Bisection on that equation is the oracle; the
  // closed form is sigma = 1 / (c sqrt(1 - (1 - delta + ...)))  -- for
  // delta = 1/2 the cubic collapses to (u - 1)^3 = -1/2.
  const double c = 1.56;
  const double sigma_oracle = oracles::bisect(
      [&](double s) { return chi_beaton_tukey(1.0 / s, c) - 0.5; }, 0.1, 10.0);
  const double closed_form = 1.0 / (c * std::sqrt(1.0 - std::pow(2.0, -1.0 / 3.0)));
  CHECK(sigma_oracle == doctest::Approx(closed_form).epsilon(1e-10));
  CHECK(closed_form == doctest::Approx(1.4113227469).epsilon(1e-9));

  ScaleSpec spec = ScaleSpec::mscale();
  spec.location = ScaleLocation::Supplied;
  spec.supplied_location = 0.0;
  const MScaleResult r = m_scale(std::vector<double>{-1.0, 1.0}, spec);
  CHECK(r.converged);
  CHECK(r.sigma == doctest::Approx(sigma_oracle).epsilon(1e-8));
}

TEST_CASE("m_scale degenerate cases") {
  ScaleSpec spec = ScaleSpec::mscale();
  const MScaleResult constant = m_scale(std::vector<double>{4.0, 4.0, 4.0, 4.0}, spec);
  CHECK(constant.sigma == 0.0);
  CHECK(constant.degenerate);

  // exactly half zeros with delta = 1/2: no positive solution
  spec.location = ScaleLocation::Zero;
  const MScaleResult half = m_scale(std::vector<double>{0.0, 0.0, 1.0, 2.0}, spec);
  CHECK(half.sigma == 0.0);
  CHECK(half.degenerate);

  // MAD start collapses but a solution exists: restart succeeds
  const std::vector<double> spiky{0.0, 0.0, 0.0, 1.0, 2.0, 5.0, -3.0};
  const MScaleResult ok = m_scale(spiky, spec);
  CHECK(ok.sigma > 0.0);
  CHECK(ok.converged);
}

TEST_CASE("m_scale calibration at the standard normal") {
  ScaleSpec spec = ScaleSpec::mscale();
  Rng rng(555);
  std::vector<double> z(10000);
  for (double& x : z) x = rng.normal();
  const MScaleResult r = m_scale(z, spec);
  CHECK(r.converged);
  CHECK(r.sigma > 0.95);
  CHECK(r.sigma < 1.05);
}

TEST_CASE("fixed-point equation residual is met on random samples") {
  ScaleSpec spec = ScaleSpec::mscale();
  Rng rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 5 + static_cast<int>(rng.below(60));
    std::vector<double> y(n);
    for (double& x : y) x = 3.0 * rng.normal() + rng.uniform();
    const MScaleResult r = m_scale(y, spec);
    if (r.degenerate) continue;
    REQUIRE(r.converged);
    REQUIRE(r.iterations <= 100);
    const double mu = median(y);
    double avg = 0.0;
    for (double x : y) avg += chi_beaton_tukey((x - mu) / r.sigma, spec.c);
    avg /= n;
    REQUIRE(std::abs(avg - spec.delta) <= spec.tol * spec.delta);
  }
}

TEST_CASE("scale equivariance for all kinds") {
  Rng rng(31337);
  for (ScaleKind kind : {ScaleKind::SD, ScaleKind::MAD, ScaleKind::MScale}) {
    ScaleSpec spec = kind == ScaleKind::SD    ? ScaleSpec::sd()
                     : kind == ScaleKind::MAD ? ScaleSpec::mad()
                                              : ScaleSpec::mscale();
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 4 + static_cast<int>(rng.below(40));
      std::vector<double> y(n);
      for (double& x : y) x = 2.0 * rng.normal();
      const double a = 20.0 * rng.uniform() - 10.0;
      const double b = 20.0 * rng.uniform() - 10.0;
      std::vector<double> ty(n);
      for (int i = 0; i < n; ++i) ty[i] = a * y[i] + b;
      const double base = scale_estimate(y, spec);
      const double transformed = scale_estimate(ty, spec);
      REQUIRE(transformed == doctest::Approx(std::abs(a) * base).epsilon(1e-10));
    }
  }
}

TEST_CASE("scale_about_zero") {
  ScaleSpec spec = ScaleSpec::sd();
  CHECK(scale_about_zero(std::vector<double>{0.0, 0.0, 0.0}, spec) == 0.0);
  CHECK(scale_about_zero(std::vector<double>{3.0}, spec) == doctest::Approx(3.0).epsilon(1e-14));

  // scale equivariance applied to the {-1, 1} oracle value
  const double closed_form = 1.0 / (1.56 * std::sqrt(1.0 - std::pow(2.0, -1.0 / 3.0)));
  const double got = scale_about_zero(std::vector<double>{-2.0, 2.0}, ScaleSpec::mscale());
  CHECK(got == doctest::Approx(2.0 * closed_form).epsilon(1e-8));

  const std::vector<double> sample{0.5, -1.5, 2.0, 0.25, -0.75, 3.0};
  for (ScaleKind kind : {ScaleKind::SD, ScaleKind::MAD, ScaleKind::MScale}) {
    ScaleSpec s = kind == ScaleKind::SD    ? ScaleSpec::sd()
                  : kind == ScaleKind::MAD ? ScaleSpec::mad()
                                           : ScaleSpec::mscale();
    const double base = scale_about_zero(sample, s);
    std::vector<double> doubled(sample);
    for (double& x : doubled) x *= -2.0;
    CHECK(scale_about_zero(doubled, s) == doctest::Approx(2.0 * base).epsilon(1e-10));
  }
}

TEST_CASE("robust scales stay bounded under heavy contamination") {
  Rng rng(2718);
  const int n = 200;
  std::vector<double> clean(n);
  for (double& x : clean) x = rng.normal();
  std::vector<double> dirty = clean;
  for (int i = 0; i < n * 2 / 5; ++i) dirty[static_cast<std::size_t>(i)] = 1e6;

  const double mad_clean = mad(clean);
  const double mad_dirty = mad(dirty);
  CHECK(mad_dirty < 3.0 * mad_clean);

  // One-sided 40% contamination also drags the median to ~0.97, so the
  // population blow-up factor for the M-scale is about 3.5, not 3.
  const double m_clean = m_scale(clean, ScaleSpec::mscale()).sigma;
  const double m_dirty = m_scale(dirty, ScaleSpec::mscale()).sigma;
  CHECK(m_dirty < 4.0 * m_clean);

  CHECK(sd(dirty) > 1e5);
}
