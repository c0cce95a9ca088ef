// Independent Nystrom verification of the bound-state spectra. The integral
// equation
//   (p^2 + k^2) psi(p) = (2 m alpha / hbar^2)
//       int p'^2 [1 + omega1 p'^2]^{omega4 - 2} G(p,p') psi(p') dp'
// is linear in 4 kappa = 2 m alpha / hbar^2, so for each omega the
// discretized operator yields coupling eigenvalues kappa_n(omega); spectra
// appear where a curve crosses the physical kappa. Everything here is
// quadrature plus a symmetric eigensolve; no root-finding, no shared solver
// machinery with deformed_solver.
#ifndef MINLEN_INTEGRAL_ORACLE_HPP
#define MINLEN_INTEGRAL_ORACLE_HPP

#include <vector>

#include "minlen/deformed_model.hpp"

namespace minlen {

enum class GridMap { linear, log, rational };

struct KernelGrid {
  std::vector<double> nodes;   // strictly increasing, positive
  std::vector<double> weights; // positive
  GridMap map = GridMap::log;
};

/// Composite Gauss-Legendre panels, one per decade.
KernelGrid make_log_grid(double lo, double hi, int points_per_decade);

/// Equal-width Gauss-Legendre panels of 16 nodes.
KernelGrid make_linear_grid(double lo, double hi, int n);

/// Log panels on [lo, hi] plus a rational tail q = hi/s, s in (0,1], so the
/// infinite range needs no truncation.
KernelGrid make_compactified_grid(double lo, double hi, int points_per_decade,
                                  int n_tail);

/// Deformed Green kernel, physical momentum units:
///   G(p,p') = (1/p_>) F(-1/2, omega4, 1/2; -omega1 p_>^2) - C,
///   C = sqrt(omega1) Gamma(1/2) Gamma(1/2+omega4) / (Gamma(1) Gamma(omega4)),
/// with C = 0 at omega4 = 0 (Gamma pole limit). Vanishes as p_> -> infinity.
double green_kernel_deformed(const Deformation& d, double p, double pprime);

struct CouplingEigencurve {
  std::vector<double> omega_samples;
  /// kappa_eigenvalues[i]: smallest positive coupling eigenvalues at
  /// omega_samples[i], ascending.
  std::vector<std::vector<double>> kappa_eigenvalues;
};

/// Coupling-as-eigenvalue curves kappa_n(omega) on a dimensionless grid in
/// q = sqrt(omega1) p. Independent eigensolve per omega sample.
CouplingEigencurve nystrom_eigencurve(const Deformation& d,
                                      const std::vector<double>& omega_samples,
                                      const KernelGrid& grid, int n_eigs);

/// Crossings kappa_n(omega) = kappa of the same discretized operator, read
/// as the positive eigenvalues 2 omega_n of the symmetric matrix
/// 4 kappa s G s - diag(q^2). Returns omega levels, ground state first.
std::vector<double> nystrom_bound_states(double kappa, const Deformation& d,
                                         const KernelGrid& grid,
                                         int max_levels);

/// Undeformed kernel at fixed k: eigenvalues lambda_n = (2 m alpha/hbar^2)_n,
/// ascending. With lambda_cut > 0 the kernel becomes 1/p_> - 1/Lambda on
/// nodes restricted to [0, Lambda], the Green function of the psi(Lambda)=0
/// boundary condition.
std::vector<double> nystrom_flat(double k, const KernelGrid& grid,
                                 double lambda_cut = 0.0);

} // namespace minlen

#endif
