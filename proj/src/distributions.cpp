#include "metabf/distributions.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <stdexcept>

namespace metabf {

namespace {
const boost::math::normal_distribution<double> kStdNormal(0.0, 1.0);

void check_prob(double p, const char* fn) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error(std::string(fn) + ": probability must lie in (0,1)");
}
}  // namespace

double norm_pdf(double x) { return boost::math::pdf(kStdNormal, x); }

double norm_logpdf(double x) {
  return -0.5 * x * x - 0.91893853320467274178;  // -x^2/2 - ln(2*pi)/2
}

double norm_cdf(double x) { return boost::math::cdf(kStdNormal, x); }

double norm_sf(double x) {
  return boost::math::cdf(boost::math::complement(kStdNormal, x));
}

double norm_quantile(double p) {
  check_prob(p, "norm_quantile");
  return boost::math::quantile(kStdNormal, p);
}

double norm_isf(double p) {
  check_prob(p, "norm_isf");
  return boost::math::quantile(boost::math::complement(kStdNormal, p));
}

double t_cdf(double x, double df) {
  boost::math::students_t_distribution<double> d(df);
  return boost::math::cdf(d, x);
}

double t_sf(double x, double df) {
  boost::math::students_t_distribution<double> d(df);
  return boost::math::cdf(boost::math::complement(d, x));
}

double t_quantile(double p, double df) {
  check_prob(p, "t_quantile");
  boost::math::students_t_distribution<double> d(df);
  return boost::math::quantile(d, p);
}

double t_isf(double p, double df) {
  check_prob(p, "t_isf");
  boost::math::students_t_distribution<double> d(df);
  return boost::math::quantile(boost::math::complement(d, p));
}

double t_to_normal(double x, double df) {
  if (x == 0.0) return 0.0;
  // Work on the tail side of x so tiny tail probabilities survive intact.
  double p = t_sf(std::fabs(x), df);
  double z = norm_isf(p);
  return x > 0.0 ? z : -z;
}

double chi2_sf(double x, double df) {
  if (x <= 0.0) return 1.0;
  boost::math::chi_squared_distribution<double> d(df);
  return boost::math::cdf(boost::math::complement(d, x));
}

double chi2_quantile(double p, double df) {
  check_prob(p, "chi2_quantile");
  boost::math::chi_squared_distribution<double> d(df);
  return boost::math::quantile(d, p);
}

}  // namespace metabf
