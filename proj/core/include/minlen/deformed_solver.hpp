// Bound-state solvers for the minimal-length problem in the dimensionless
// variables (kappa, omega, omega4):
//
//  * beta = beta': the quantization condition is a hypergeometric zero,
//    h(omega) = F(5/4 - nu~/2, 5/4 + nu~/2, 3/2; (2 omega - 1)/(2 omega)) = 0;
//  * general beta, beta': shooting on the momentum-space ODE in
//    q = sqrt(beta+beta') p, imposing decay faster than q^{-2} through the
//    tail coefficient C1 = 0;
//  * the small-omega asymptotic spectrum shared with the UV-cutoff picture;
//  * the zero-energy solution and the numerical limit validations
//    (ordinary-QM limit, tail exponents, E -> 0 limit).
#ifndef MINLEN_DEFORMED_SOLVER_HPP
#define MINLEN_DEFORMED_SOLVER_HPP

#include <string>
#include <utility>
#include <vector>

#include "minlen/deformed_model.hpp"
#include "minlen/spectrum.hpp"

namespace minlen {

/// Quantization function h(omega) of the beta = beta' case, real by the
/// conjugate-parameter structure. Defined for kappa > 0, 0 < omega < 1/2.
double quantization_h(double kappa, double omega);

/// h(omega) |x|^{5/4} with x = (2 omega - 1)/(2 omega): same zeros, O(1)
/// magnitude down to arbitrarily small omega (the bare h underflows like
/// omega^{5/4}). Root searches use this form.
double quantization_h_scaled(double kappa, double omega);

enum class ScanMethod { hypergeometric_exact, shooting_general, heun_series };

struct QuantizationScan {
  double kappa = 0.0;
  Deformation deformation; // zero-initialized for the dimensionless path
  ScanMethod method = ScanMethod::hypergeometric_exact;
  std::vector<std::pair<double, double>> grid; // (omega, h), omega ascending
};

QuantizationScan scan_quantization(double kappa, double omega_min,
                                   double omega_max, int n_points,
                                   bool log_spacing = false);

/// Zeros of h in (omega_min, omega_max), ground state (largest omega) first,
/// refined to |d omega / omega| < 1e-10. Empty below the critical coupling.
SpectrumResult find_spectrum_exact(double kappa, double omega_min,
                                   double omega_max, int max_levels,
                                   double rel_tol = 1e-10);

/// Small-omega spectrum in omega units:
/// omega_n = (1/2) exp{(2/nu)[arg(A) - (n+1/2) pi]}, keeping
/// omega_n < f_valid / 2 (that is |E_n| < f_valid / (2 m omega1)).
std::vector<double> asymptotic_levels_omega(double kappa, int n_lo, int n_hi,
                                            double f_valid = 0.01);

/// Same spectrum in energy units, E_n = -omega_n / (mass omega1), with the
/// 1/(4 m beta) prefactor generalized to 1/(2 m (beta + beta')).
SpectrumResult asymptotic_spectrum(double kappa, const Deformation& d,
                                   double mass, int n_lo, int n_hi,
                                   double f_valid = 0.01);

/// Tail decomposition psi(q) ~ c1 q^{-2} + c2 q^{-(3+2 omega4)} of the
/// regular solution, fitted over the last decade of q. c1_scaled/c2_scaled
/// are the same coefficients evaluated at q_ref (the geometric midpoint of
/// the fit window), directly comparable in magnitude; c1_scaled = 0 is the
/// quantization condition.
struct ShootingResult {
  double c1 = 0.0;
  double c2 = 0.0;
  double c1_scaled = 0.0;
  double c2_scaled = 0.0;
  double fit_residual = 0.0;
  double q_ref = 0.0;
};

/// Integrates the deformed ODE from a Frobenius start at the origin out to
/// q_max (momenta in units with beta + beta' = 1). q_min <= 0 selects the
/// start point automatically from the series coefficient.
ShootingResult shoot_deformed(double kappa, const Deformation& d, double omega,
                              double q_min = 0.0, double q_max = 400.0);

/// Zeros of omega -> C1(omega) by bracketing and refinement; coincides with
/// find_spectrum_exact for beta = beta'.
SpectrumResult find_spectrum_general(double kappa, const Deformation& d,
                                     double omega_min, double omega_max,
                                     int max_levels, double rel_tol = 1e-10);

/// Critical coupling below which no bound state exists, located by bisection
/// on the existence of a quantization-function zero. The existence scan uses
/// the scaled quantization function on a log grid reaching omega = 1e-60 so
/// that the exponentially deep ground state near criticality stays visible.
double critical_coupling(const Deformation& d, double tol = 1e-3);

/// Zero-energy wavefunction
///   psi(xi) = (1-xi) xi^{-5/4} [A xi^{-i nu/2} F(a,b,c;xi)
///             + B xi^{+i nu/2} F(a-c+1,b-c+1,2-c;xi)]
/// for 0 < xi < 1; real when B = conj(A).
Complex zero_energy_wavefunction(double kappa, double omega4, double xi,
                                 Complex coef_a, Complex coef_b);

struct LimitCheck {
  bool pass = false;
  double error = 0.0;
  std::string detail;
};

/// Numerical limit validations:
///  A  beta, beta' -> 0: the deformed solution matches the ordinary-QM
///     hypergeometric at moderate p (1e-4 relative);
///  B  p -> infinity: measured tail exponents hit -2 and -(3+2 omega4)
///     within 1e-3;
///  C  E -> 0: the full solution matches the zero-energy solution with A,B
///     fitted at two points (1e-4 relative at interior xi).
struct LimitReport {
  LimitCheck ordinary_limit;
  LimitCheck tail_exponents;
  LimitCheck zero_energy_limit;
  bool all_pass() const {
    return ordinary_limit.pass && tail_exponents.pass && zero_energy_limit.pass;
  }
};

LimitReport validate_limits(double kappa, const Deformation& d);

} // namespace minlen

#endif
