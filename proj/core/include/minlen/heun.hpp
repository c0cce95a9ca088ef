// Local Heun function at the singular point xi=0: power-series coefficients
// from the three-term recurrence, partial-sum evaluation inside the disc of
// convergence, and continuation by direct integration of the canonical Heun
// ODE
//   f'' + (c/xi + e/(xi-1) + d/(xi-xi0)) f' + (a b xi + q) /
//         (xi (xi-1)(xi-xi0)) f = 0 .
#ifndef MINLEN_HEUN_HPP
#define MINLEN_HEUN_HPP

#include <complex>
#include <vector>

#include "minlen/complex_gamma.hpp"

namespace minlen {

struct HeunParams {
  double xi0 = 0.0; // location of the third finite singular point
  double q = 0.0;   // accessory parameter
  Complex a, b;     // either both real or a conjugate pair
  double c = 0.0, d = 0.0, e = 0.0;

  double ab_sum() const { return (a + b).real(); }
  double ab_prod() const { return (a * b).real(); }

  /// Fuchsian residual a+b+1-(c+d+e).
  double fuchsian_residual() const;

  /// Throws std::domain_error unless: the Fuchsian condition holds to 1e-12,
  /// xi0 is not 0 or 1, c is not a nonpositive integer, and a+b, a*b are real
  /// (a,b real or conjugate; the recurrence then stays real).
  void validate() const;
};

/// Radius of convergence of the series at 0: min(1, |xi0|).
double heun_radius(const HeunParams& p);

/// Coefficients C_0..C_n_max of the local series, C_0 = 1,
/// C_1 = -q/(c xi0).
std::vector<double> heun_coefficients(const HeunParams& p, int n_max);

/// Partial sum of the local series at xi, |xi| < heun_radius(p). Terminates
/// when the last two terms both fall below tol relative to the sum.
double heun_local(const HeunParams& p, double xi, double tol = 1e-14);

struct HeunState {
  double f = 0.0;
  double fprime = 0.0;
};

/// Continues (f, f') from xi_start to xi_end by adaptive integration of the
/// Heun ODE. The closed interval must stay at least delta_sing away from the
/// singular points {0, 1, xi0}.
HeunState heun_ode_eval(const HeunParams& p, double xi_start, double f_start,
                        double fprime_start, double xi_end,
                        double rel_tol = 1e-10, double delta_sing = 1e-3);

} // namespace minlen

#endif
