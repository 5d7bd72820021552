#pragma once

namespace aucgap {

// Standard normal CDF, accurate to machine precision via erfc.
double normal_cdf(double x);

// Standard normal quantile (inverse CDF) for p in (0,1), computed with
// Wichura's AS241 rational approximations (absolute error < 1e-15).
// Throws std::invalid_argument outside (0,1).
double normal_quantile(double p);

// AUC of the binormal score model: positives ~ N(d_prime, 1),
// negatives ~ N(0, 1). Equals normal_cdf(d_prime / sqrt(2)).
double binormal_auc(double d_prime);

} // namespace aucgap
