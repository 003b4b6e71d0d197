#include <doctest.h>

#include <cmath>

#include "dicelab/clt.hpp"
#include "dicelab/errors.hpp"

using namespace dicelab;

namespace {

// Test-only oracle for the standard normal CDF, independent of the library's
// erfc-based path: Maclaurin series for erf on the bulk, Lentz continued
// fraction for erfc on the tails, all in long double.
long double erf_series(long double x) {
  const long double two_over_sqrt_pi = 1.1283791670955125738961589031L;
  long double term = x, sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x * x / n;
    long double add = term / (2 * n + 1);
    sum += add;
    if (std::fabs(add) < 1e-25L * std::fabs(sum))
      break;
  }
  return two_over_sqrt_pi * sum;
}

long double erfc_continued_fraction(long double x) {
  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  const long double sqrt_pi = 1.7724538509055160272981674833L;
  long double f = x, c = f, d = 0;
  for (int n = 1; n < 300; ++n) {
    long double a = n / 2.0L;
    long double b = x; // every partial denominator is x
    d = b + a * d;
    if (d == 0)
      d = 1e-30L;
    c = b + a / c;
    if (c == 0)
      c = 1e-30L;
    d = 1 / d;
    long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1) < 1e-25L)
      break;
  }
  return std::exp(-x * x) / (sqrt_pi * f);
}

double oracle_phi(double z) {
  long double x = -z / 1.4142135623730950488016887242L; // -z / sqrt(2)
  long double erfc_val;
  if (std::fabs(x) < 3)
    erfc_val = 1 - erf_series(x);
  else if (x > 0)
    erfc_val = erfc_continued_fraction(x);
  else
    erfc_val = 2 - erfc_continued_fraction(-x);
  return static_cast<double>(0.5L * erfc_val);
}

const DieSpec &loaded_die() {
  static DieSpec die = parse_die_text("1:1,2:1,3:1,4:1,5:1,6:5");
  return die;
}

} // namespace

TEST_CASE("oracle sanity") {
  CHECK(oracle_phi(0) == doctest::Approx(0.5).epsilon(1e-15));
  // Phi(1) to 16 digits (classical constant).
  CHECK(oracle_phi(1) == doctest::Approx(0.8413447460685429).epsilon(1e-13));
  CHECK(oracle_phi(-1) == doctest::Approx(0.1586552539314571).epsilon(1e-13));
}

TEST_CASE("NormalParams rejects nonpositive sigma") {
  CHECK_THROWS_AS(NormalParams(0, 0), DomainError);
  CHECK_THROWS_AS(NormalParams(0, -1), DomainError);
}

TEST_CASE("pdf at the mean is 1/sqrt(2 pi)") {
  NormalParams std_normal(0, 1);
  CHECK(normal_pdf(0, std_normal) ==
        doctest::Approx(0.39894228040143268).epsilon(1e-12));
}

TEST_CASE("pdf inflection points sit at exp(-1/2) of the peak") {
  NormalParams p(3.0, 2.0);
  double peak = normal_pdf(3.0, p);
  CHECK(normal_pdf(5.0, p) == doctest::Approx(peak * std::exp(-0.5)).epsilon(1e-12));
  CHECK(normal_pdf(1.0, p) == doctest::Approx(peak * std::exp(-0.5)).epsilon(1e-12));
}

TEST_CASE("pdf symmetry") {
  NormalParams p(1.5, 0.7);
  for (double t = 0.1; t < 4; t += 0.3)
    CHECK(normal_pdf(1.5 + t, p) == doctest::Approx(normal_pdf(1.5 - t, p)).epsilon(1e-14));
}

TEST_CASE("cdf agrees with the series/continued-fraction oracle") {
  NormalParams std_normal(0, 1);
  CHECK(normal_cdf(0, std_normal) == 0.5); // exact at the API level
  for (double z = -7.75; z <= 7.75; z += 0.25) {
    CAPTURE(z);
    CHECK(std::fabs(normal_cdf(z, std_normal) - oracle_phi(z)) <= 1e-12);
  }
}

TEST_CASE("cdf complements and limits") {
  NormalParams std_normal(0, 1);
  for (double z = 0.25; z <= 5; z += 0.5)
    CHECK(normal_cdf(z, std_normal) + normal_cdf(-z, std_normal) ==
          doctest::Approx(1.0).epsilon(1e-14));
  CHECK(normal_cdf(-8, std_normal) < 1e-14);
  CHECK(normal_cdf(8, std_normal) > 1 - 1e-14);
}

TEST_CASE("cdf is monotone on a grid") {
  NormalParams std_normal(0, 1);
  double prev = 0;
  for (double z = -8; z <= 8; z += 0.125) {
    double now = normal_cdf(z, std_normal);
    CHECK(now >= prev);
    prev = now;
  }
}

TEST_CASE("quantile basics") {
  CHECK(std::fabs(normal_quantile(0.5)) < 1e-12);
  double z = normal_quantile(0.6827);
  CHECK(z == doctest::Approx(0.4754).epsilon(1e-3));
  CHECK(standard_normal_cdf(z) == doctest::Approx(0.6827).epsilon(1e-10));
  CHECK_THROWS_AS(normal_quantile(0.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(1.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(-0.3), DomainError);
}

TEST_CASE("quantile round-trips") {
  for (double z = -5; z <= 5; z += 0.25) {
    CAPTURE(z);
    CHECK(std::fabs(normal_quantile(standard_normal_cdf(z)) - z) <= 1e-9);
  }
  for (double q = 0.01; q < 1; q += 0.07) {
    CAPTURE(q);
    CHECK(std::fabs(standard_normal_cdf(normal_quantile(q)) - q) <= 1e-9);
  }
}

TEST_CASE("empirical-rule sigma, as printed") {
  double sigma = sigma_from_empirical_rule(18, 14);
  CHECK(sigma == doctest::Approx(8.414).epsilon(0.01 / 8.414));
}

TEST_CASE("empirical-rule sigma, corrected variant recovers the truth") {
  double sigma_true = 2.25;
  double mean = 10;
  double sigma = sigma_from_empirical_rule(mean + sigma_true, mean, {.corrected = true});
  CHECK(sigma == doctest::Approx(sigma_true).epsilon(1e-6));
}

TEST_CASE("empirical-rule degenerate inputs") {
  CHECK_THROWS_AS(sigma_from_empirical_rule(14, 14), DomainError);
  CHECK_THROWS_AS(sigma_from_empirical_rule(13, 14), DomainError);
  CHECK(sigma_from_empirical_rule(13, 14, {.normalize_sign = true}) > 0);
}

TEST_CASE("approximation report: uniform is far from normal") {
  ApproximationReport r = approximation_report(DieSpec::fair_die(), 1, true);
  CHECK(r.total_variation > 0.05);
  CHECK(r.mu == doctest::Approx(3.5));
  CHECK(r.sigma == doctest::Approx(std::sqrt(35.0 / 12.0)).epsilon(1e-12));
}

TEST_CASE("total variation decreases with more dice") {
  for (const DieSpec &die : {DieSpec::fair_die(), loaded_die()}) {
    double prev = 2;
    for (unsigned d : {1u, 2u, 4u, 8u}) {
      ApproximationReport r = approximation_report(die, d, true);
      CHECK(r.total_variation < prev);
      CHECK(r.total_variation >= 0);
      CHECK(r.total_variation <= 1);
      prev = r.total_variation;
    }
  }
}

TEST_CASE("without correction, sup_error does not grow from d=2 to d=8") {
  double at2 = approximation_report(DieSpec::fair_die(), 2, false).sup_error;
  double at8 = approximation_report(DieSpec::fair_die(), 8, false).sup_error;
  CHECK(at8 <= at2);
}

TEST_CASE("standardized distribution has mean 0 and variance 1") {
  for (const DieSpec &die : {DieSpec::fair_die(), loaded_die()}) {
    for (unsigned d : {1u, 4u, 10u}) {
      auto points = standardized_distribution(die, d);
      double mean = 0, var = 0;
      for (const auto &[z, p] : points) {
        mean += to_double(p) * z;
        var += to_double(p) * z * z;
      }
      CHECK(std::fabs(mean) <= 1e-12);
      CHECK(std::fabs(var - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("68.27% band at d = 10") {
  auto points = standardized_distribution(DieSpec::fair_die(), 10);
  double band = 0;
  for (const auto &[z, p] : points)
    if (std::fabs(z) <= 1)
      band += to_double(p);
  CHECK(band == doctest::Approx(0.6827).epsilon(0.02 / 0.6827));
}

TEST_CASE("degenerate die is rejected") {
  DieSpec constant = DieSpec::make({{"1", 1, 1}});
  CHECK_THROWS_AS(approximation_report(constant, 3, true), DomainError);
  CHECK_THROWS_AS(standardized_distribution(constant, 3), DomainError);
}
