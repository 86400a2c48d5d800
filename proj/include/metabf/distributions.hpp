#pragma once

// Probability and quantile kernels used throughout the library.
// All tail functions stay accurate (relative, not absolute) down to
// p ~ 1e-300; inversions accept probabilities in the same range.

namespace metabf {

double norm_pdf(double x);
double norm_logpdf(double x);
double norm_cdf(double x);
double norm_sf(double x);        // upper tail P(Z > x)
double norm_quantile(double p);  // Phi^{-1}(p)
double norm_isf(double p);       // upper-tail inverse: x with P(Z > x) = p

double t_cdf(double x, double df);
double t_sf(double x, double df);
double t_quantile(double p, double df);
double t_isf(double p, double df);

// Sign-preserving quantile map from t(df) to the standard normal.
double t_to_normal(double x, double df);

double chi2_sf(double x, double df);
double chi2_quantile(double p, double df);

}  // namespace metabf
