// Parameter algebra of the deformed (minimal-length) problem: deformation
// parameters (beta, beta'), the omega notations
//   omega1 = beta+beta', omega2 = beta+2beta', omega3 = 2beta+3beta',
//   omega4 = beta/(beta+beta'), omega = -m (beta+beta') E,
// minimal lengths, the scalar-product weight exponent, and the special
// function parameter bundles built from them.
#ifndef MINLEN_DEFORMED_MODEL_HPP
#define MINLEN_DEFORMED_MODEL_HPP

#include "minlen/heun.hpp"
#include "minlen/hyp2f1.hpp"

namespace minlen {

struct Deformation {
  double beta = 0.0;
  double beta_prime = 0.0;
  double gamma = 0.0; // representation bookkeeping; 0 in all solver paths

  double omega1() const { return beta + beta_prime; }
  double omega4() const { return beta / (beta + beta_prime); }
};

struct OmegaParams {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega3 = 0.0;
  double omega4 = 0.0;
  double omega = 0.0; // -m (beta+beta') E, > 0 for bound states
  double kappa = 0.0;
};

OmegaParams omega_params(const Deformation& d, double kappa, double omega);

/// Minimal position uncertainty sqrt(D beta + beta') in hbar = 1 units.
double minimal_length(const Deformation& d, int dim);

/// Measure exponent (gamma - beta' (D-1)/2) / (beta + beta') of the
/// deformed scalar product.
double weight_exponent(const Deformation& d, int dim);

/// Heun parameters of the full bound-state equation, for 0 < omega < 1/2:
///   a,b = (3 - omega4 -+ nu~)/2, c = 3/2, d = 2, e = 1/2 - omega4,
///   q = -(3/2 + kappa/(1-2 omega)), xi0 = 2 omega/(2 omega - 1),
///   nu~ = sqrt((omega4-1)^2 - 4 kappa/(1-2 omega)).
struct DeformedHeunBundle {
  HeunParams heun;
  Complex nu_tilde;
  double xi0 = 0.0;
  double q = 0.0;
};

DeformedHeunBundle heun_bundle(const OmegaParams& op);

/// beta = beta' reduction: hypergeometric parameters a = 5/4 - nu~/2,
/// b = 5/4 + nu~/2, c = 3/2 with nu~ = sqrt(1/4 - 4 kappa/(1-2 omega)).
/// Requires omega4 = 1/2.
Hyp2F1Params hyp_bundle_special(const OmegaParams& op);

/// Zero-energy parameters: a,b = 1/4 - omega4/2 -+ mu/2 - i nu/2,
/// c = 1 - i nu, mu = sqrt((omega4-1)^2 - 4 kappa). Requires kappa > 1/16.
Hyp2F1Params zero_energy_bundle(const OmegaParams& op);

} // namespace minlen

#endif
