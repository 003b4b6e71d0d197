#pragma once

#include <utility>
#include <vector>

#include "dicelab/sumdist.hpp"

namespace dicelab {

struct NormalParams {
  double mu;
  double sigma;
  NormalParams(double mu_, double sigma_); // rejects sigma <= 0
};

double normal_pdf(double x, const NormalParams &p);

// Phi((x - mu) / sigma), computed through the complementary error function.
double normal_cdf(double x, const NormalParams &p);

inline double standard_normal_cdf(double z) { return normal_cdf(z, NormalParams(0, 1)); }

// z with Phi(z) = q, by bisection on the CDF; q must lie in (0, 1).
double normal_quantile(double q);

struct EmpiricalRuleOptions {
  // The printed rule uses q = 0.6827; the corrected variant reads the
  // one-sided value Phi(1) instead.
  bool corrected = false;
  // Reflect a negative result instead of rejecting it.
  bool normalize_sign = false;
};

// sigma = (inflection - mean) / quantile(q): the guess-the-inflection-point
// recipe for reading a standard deviation off a bell chart.
double sigma_from_empirical_rule(double inflection, double mean,
                                 const EmpiricalRuleOptions &opts = {});

struct ApproximationReport {
  unsigned d = 0;
  double mu = 0;
  double sigma = 0;
  bool continuity_correction = true;
  double sup_error = 0;        // max |exact mass - normal mass| over support
  double total_variation = 0;  // 1/2 (sum |exact - approx| + leaked tail mass)
};

// How far the exact sum distribution sits from its moment-matched normal
// approximation. With correction on, the normal mass at integer s is
// Phi(s+1/2) - Phi(s-1/2); with it off, the raw density value pdf(s).
ApproximationReport approximation_report(const DieSpec &die, unsigned d,
                                         bool continuity_correction = true);

// Support points mapped to z = (s - mu_d) / sigma_d, masses unchanged.
// The mapped distribution has mean 0 and variance 1.
std::vector<std::pair<double, Rational>> standardized_distribution(const DieSpec &die,
                                                                   unsigned d);

} // namespace dicelab
