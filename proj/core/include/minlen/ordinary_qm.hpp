// Momentum-space treatment of the attractive -alpha/R^2 potential in
// ordinary quantum mechanics: s-wave bound-state wavefunction
//   psi(p) = F(5/4 + i nu/2, 5/4 - i nu/2, 3/2; -p^2/k^2),  k^2 = -2mE,
// its closed-form scalar product, the orthogonality spectrum
// E_n = E_1 exp(-2 n pi / nu), and the UV-cutoff spectrum obtained from the
// boundary condition psi(Lambda) = 0.
//
// Everything is dimensionless: kappa = m alpha / (2 hbar^2),
// nu = sqrt(4 kappa - 1/4). hbar = 1 throughout.
#ifndef MINLEN_ORDINARY_QM_HPP
#define MINLEN_ORDINARY_QM_HPP

#include <utility>

#include "minlen/complex_gamma.hpp"
#include "minlen/hyp2f1.hpp"
#include "minlen/spectrum.hpp"

namespace minlen {

/// Dimensionless coupling. For kappa > 1/16 the exponent nu is real
/// (oscillatory, log-periodic regime); below it nu is imaginary and `nu`
/// stores its magnitude.
struct Coupling {
  double kappa = 0.0;
  double nu = 0.0;
  bool oscillatory = false;

  static Coupling make(double kappa);
  /// nu in the oscillatory regime; throws otherwise.
  double nu_real() const;
};

/// Hypergeometric parameters of the bound-state solution (Eq. a=5/4+i nu/2).
Hyp2F1Params ordinary_params(const Coupling& c);

/// psi(p) with normalization F(...;0) = 1. Requires k > 0, p >= 0, and the
/// oscillatory regime.
double wavefunction_momentum(const Coupling& c, double k, double p);

/// Closed-form scalar product <psi_1|psi_2> (A_1 = A_2 = 1). The k1 = k2
/// limit is removable and handled explicitly.
double scalar_product_closed(const Coupling& c, double k1, double k2);

/// Direct quadrature of <psi_1|psi_2> = int p^2 psi_1 psi_2 dp, integrating
/// to 50 max(k1,k2) and summing the oscillatory p^{-5/2 +- i nu} tail in
/// closed form. Independent check of scalar_product_closed.
double scalar_product_quadrature(const Coupling& c, double k1, double k2,
                                 double rel_tol = 1e-8);

/// E_n = E1 exp(-2 n pi / nu) for n in [n_lo, n_hi]; E1 < 0.
SpectrumResult orthogonality_spectrum(const Coupling& c, double E1, int n_lo,
                                      int n_hi);

/// Cutoff regularization: E_n = -(Lambda^2/2m) exp{(2/nu)[arg(A)-(n+1/2)pi]}
/// keeping only |E_n| < f_valid Lambda^2/(2m), the domain where the
/// derivation (Lambda >> k) holds.
SpectrumResult cutoff_spectrum(const Coupling& c, double lambda_cut,
                               double mass, int n_lo, int n_hi,
                               double f_valid = 0.01);

/// A = Gamma(i nu) / (Gamma(5/4 + i nu/2) Gamma(1/4 + i nu/2)); its argument
/// fixes the phase of both the cutoff and the minimal-length spectra.
Complex asymptotic_amplitude(const Coupling& c);

/// Roots of 1 = 4 kappa [1/(s+3) - 1/(s+2)]: s = -5/2 +- i nu for
/// kappa > 1/16, a real pair below, a double root at kappa = 1/16.
std::pair<Complex, Complex> characteristic_roots(const Coupling& c);

/// Flat Green kernel theta(p-p')/p + theta(p'-p)/p' = 1/max(p,p').
double green_kernel_flat(double p, double pprime);

} // namespace minlen

#endif
