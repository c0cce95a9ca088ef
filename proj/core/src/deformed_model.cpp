#include "minlen/deformed_model.hpp"

#include <cmath>
#include <stdexcept>

namespace minlen {

OmegaParams omega_params(const Deformation& d, double kappa, double omega) {
  if (d.beta < 0.0 || d.beta_prime < 0.0)
    throw std::domain_error("omega_params: beta, beta' must be >= 0");
  if (d.beta + d.beta_prime <= 0.0)
    throw std::domain_error("omega_params: beta + beta' must be > 0");
  if (!(kappa > 0.0)) throw std::domain_error("omega_params: kappa must be > 0");
  if (omega < 0.0) throw std::domain_error("omega_params: omega must be >= 0");
  OmegaParams op;
  op.omega1 = d.beta + d.beta_prime;
  op.omega2 = d.beta + 2.0 * d.beta_prime;
  op.omega3 = 2.0 * d.beta + 3.0 * d.beta_prime;
  op.omega4 = d.beta / (d.beta + d.beta_prime);
  op.omega = omega;
  op.kappa = kappa;
  return op;
}

double minimal_length(const Deformation& d, int dim) {
  if (dim < 1) throw std::domain_error("minimal_length: dim must be >= 1");
  return std::sqrt(dim * d.beta + d.beta_prime);
}

double weight_exponent(const Deformation& d, int dim) {
  if (dim < 1) throw std::domain_error("weight_exponent: dim must be >= 1");
  if (d.beta + d.beta_prime <= 0.0)
    throw std::domain_error("weight_exponent: beta + beta' must be > 0");
  return (d.gamma - d.beta_prime * (dim - 1) / 2.0) / (d.beta + d.beta_prime);
}

DeformedHeunBundle heun_bundle(const OmegaParams& op) {
  if (!(op.omega > 0.0) || !(op.omega < 0.5))
    throw std::domain_error("heun_bundle: requires 0 < omega < 1/2");
  double om4 = op.omega4;
  double rad = (om4 - 1.0) * (om4 - 1.0) - 4.0 * op.kappa / (1.0 - 2.0 * op.omega);
  Complex nu_tilde = std::sqrt(Complex(rad, 0.0));
  DeformedHeunBundle b;
  b.nu_tilde = nu_tilde;
  b.xi0 = 2.0 * op.omega / (2.0 * op.omega - 1.0);
  b.q = -(1.5 + op.kappa / (1.0 - 2.0 * op.omega));
  b.heun.xi0 = b.xi0;
  b.heun.q = b.q;
  b.heun.a = (Complex(3.0 - om4, 0.0) - nu_tilde) / 2.0;
  b.heun.b = (Complex(3.0 - om4, 0.0) + nu_tilde) / 2.0;
  b.heun.c = 1.5;
  b.heun.d = 2.0;
  b.heun.e = 0.5 - om4;
  b.heun.validate();
  return b;
}

Hyp2F1Params hyp_bundle_special(const OmegaParams& op) {
  if (std::abs(op.omega4 - 0.5) > 1e-12)
    throw std::domain_error("hyp_bundle_special: requires beta = beta' (omega4 = 1/2)");
  if (op.omega == 0.5)
    throw std::domain_error("hyp_bundle_special: omega = 1/2 pole");
  Complex nu_tilde =
      std::sqrt(Complex(0.25 - 4.0 * op.kappa / (1.0 - 2.0 * op.omega), 0.0));
  return {Complex(1.25, 0.0) - nu_tilde / 2.0, Complex(1.25, 0.0) + nu_tilde / 2.0,
          Complex(1.5, 0.0)};
}

Hyp2F1Params zero_energy_bundle(const OmegaParams& op) {
  double disc = 4.0 * op.kappa - 0.25;
  if (!(disc > 0.0))
    throw std::domain_error("zero_energy_bundle: requires kappa > 1/16");
  double nu = std::sqrt(disc);
  double om4 = op.omega4;
  Complex mu = std::sqrt(Complex((om4 - 1.0) * (om4 - 1.0) - 4.0 * op.kappa, 0.0));
  Complex base(0.25 - 0.5 * om4, -0.5 * nu);
  return {base - mu / 2.0, base + mu / 2.0, Complex(1.0, -nu)};
}

} // namespace minlen
