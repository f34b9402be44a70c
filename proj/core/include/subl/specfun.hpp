#ifndef SUBL_SPECFUN_HPP
#define SUBL_SPECFUN_HPP

namespace subl::sf {

/// Gamma function for x > 0, Lanczos approximation (relative error ~1e-14).
double gamma(double x);

/// log Gamma for x > 0.
double log_gamma(double x);

/// Upper incomplete gamma Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt, s > 0, x >= 0.
/// Used for analytic quadrature tail bounds.
double gamma_upper(double s, double x);

/// Modified Bessel function of the first kind, real order nu > -1, x >= 0.
/// Power series for small arguments, asymptotic expansion beyond
/// x = max(30, nu^2); the two branches are cross-checked in the tests.
double bessel_i(double nu, double x);

/// Exponentially scaled value e^{-x} I_nu(x). Never overflows for x <= 1e8.
double bessel_i_scaled(double nu, double x);

} // namespace subl::sf

#endif
