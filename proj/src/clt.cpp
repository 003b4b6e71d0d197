#include "dicelab/clt.hpp"

#include <cmath>

#include "dicelab/errors.hpp"

namespace dicelab {

NormalParams::NormalParams(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
  if (!(sigma_ > 0))
    throw DomainError("sigma must be positive");
}

double normal_pdf(double x, const NormalParams &p) {
  static const double inv_sqrt_2pi = 0.3989422804014326779; // 1/sqrt(2*pi)
  double z = (x - p.mu) / p.sigma;
  return inv_sqrt_2pi / p.sigma * std::exp(-0.5 * z * z);
}

double normal_cdf(double x, const NormalParams &p) {
  double z = (x - p.mu) / p.sigma;
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double normal_quantile(double q) {
  if (!(q > 0.0) || !(q < 1.0))
    throw DomainError("quantile argument must lie strictly between 0 and 1");
  double lo = -9.0, hi = 9.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    double mid = 0.5 * (lo + hi);
    if (standard_normal_cdf(mid) < q)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double sigma_from_empirical_rule(double inflection, double mean,
                                 const EmpiricalRuleOptions &opts) {
  if (inflection == mean)
    throw DomainError("inflection point coincides with the mean");
  double q = opts.corrected ? standard_normal_cdf(1.0) : 0.6827;
  double sigma = (inflection - mean) / normal_quantile(q);
  if (sigma < 0) {
    if (!opts.normalize_sign)
      throw DomainError("inflection point lies on the wrong side of the mean");
    sigma = -sigma;
  }
  return sigma;
}

ApproximationReport approximation_report(const DieSpec &die, unsigned d,
                                         bool continuity_correction) {
  Distribution dist = sum_pmf_convolution(die, d);
  Rational exact_mean = die.mean() * d;
  Rational exact_var = die.variance() * d;
  if (exact_var == 0)
    throw DomainError("die has zero variance; no normal approximation exists");

  ApproximationReport report;
  report.d = d;
  report.mu = to_double(exact_mean);
  report.sigma = std::sqrt(to_double(exact_var));
  report.continuity_correction = continuity_correction;
  NormalParams params(report.mu, report.sigma);

  double abs_sum = 0, approx_sum = 0;
  for (const auto &[s, p] : dist.mass) {
    double exact = to_double(p);
    double approx =
        continuity_correction
            ? normal_cdf(static_cast<double>(s) + 0.5, params) -
                  normal_cdf(static_cast<double>(s) - 0.5, params)
            : normal_pdf(static_cast<double>(s), params);
    double err = std::abs(exact - approx);
    report.sup_error = std::max(report.sup_error, err);
    abs_sum += err;
    approx_sum += approx;
  }
  // The approximation puts mass outside the exact support; that tail counts
  // toward the distance too.
  double leaked = std::max(0.0, 1.0 - approx_sum);
  report.total_variation = 0.5 * (abs_sum + leaked);
  if (report.total_variation > 1.0)
    report.total_variation = 1.0;
  return report;
}

std::vector<std::pair<double, Rational>> standardized_distribution(const DieSpec &die,
                                                                   unsigned d) {
  Rational exact_var = die.variance() * d;
  if (exact_var == 0)
    throw DomainError("die has zero variance; cannot standardize");
  double mu = to_double(die.mean() * d);
  double sigma = std::sqrt(to_double(exact_var));
  Distribution dist = sum_pmf_convolution(die, d);
  std::vector<std::pair<double, Rational>> result;
  result.reserve(dist.mass.size());
  for (const auto &[s, p] : dist.mass)
    result.emplace_back((static_cast<double>(s) - mu) / sigma, p);
  return result;
}

} // namespace dicelab
