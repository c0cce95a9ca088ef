#include "minlen/ordinary_qm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "minlen/quadrature.hpp"

namespace minlen {

namespace {

constexpr double kPi = std::numbers::pi;

void require_oscillatory(const Coupling& c, const char* who) {
  if (!c.oscillatory)
    throw std::domain_error(std::string(who) + ": requires kappa > 1/16");
}

} // namespace

const char* to_string(SpectrumMethod m) {
  switch (m) {
    case SpectrumMethod::orthogonality: return "orthogonality";
    case SpectrumMethod::cutoff: return "cutoff";
    case SpectrumMethod::exact_deformed: return "exact_deformed";
    case SpectrumMethod::asymptotic_deformed: return "asymptotic_deformed";
    case SpectrumMethod::oracle: return "oracle";
  }
  return "unknown";
}

Coupling Coupling::make(double kappa) {
  if (!(kappa > 0.0)) throw std::domain_error("Coupling: kappa must be > 0");
  Coupling c;
  c.kappa = kappa;
  double disc = 4.0 * kappa - 0.25;
  c.oscillatory = disc > 0.0;
  c.nu = std::sqrt(std::abs(disc));
  return c;
}

double Coupling::nu_real() const {
  if (!oscillatory)
    throw std::domain_error("Coupling: nu is imaginary for kappa <= 1/16");
  return nu;
}

Hyp2F1Params ordinary_params(const Coupling& c) {
  double nu = c.nu_real();
  return {Complex(1.25, 0.5 * nu), Complex(1.25, -0.5 * nu), Complex(1.5, 0.0)};
}

double wavefunction_momentum(const Coupling& c, double k, double p) {
  require_oscillatory(c, "wavefunction_momentum");
  if (!(k > 0.0) || !(p >= 0.0))
    throw std::domain_error("wavefunction_momentum: need k > 0, p >= 0");
  return hyp2f1(ordinary_params(c), -(p * p) / (k * k)).real();
}

namespace {

// Omega prefactor of the closed-form scalar product, exactly as printed
// (k1^{5/2} k2^{1/2}; the apparent asymmetry cancels against the
// (k1/k2)^{i nu} factors in the full expression).
double omega_prefactor(const Coupling& c, double k1, double k2) {
  double nu = c.nu_real();
  Complex ln = 2.0 * ln_gamma(Complex(1.5, 0.0)) + ln_gamma(Complex(1.0, nu)) +
               ln_gamma(Complex(1.0, -nu)) - ln_gamma(Complex(2.0, 0.0)) -
               2.0 * ln_gamma(Complex(1.25, 0.5 * nu)) -
               2.0 * ln_gamma(Complex(1.25, -0.5 * nu));
  return 0.5 * std::pow(k1, 2.5) * std::pow(k2, 0.5) * std::exp(ln).real();
}

} // namespace

double scalar_product_closed(const Coupling& c, double k1, double k2) {
  require_oscillatory(c, "scalar_product_closed");
  if (!(k1 > 0.0) || !(k2 > 0.0))
    throw std::domain_error("scalar_product_closed: need k1, k2 > 0");
  double nu = c.nu;
  double om = omega_prefactor(c, k1, k2);
  double x = std::log(k1 / k2);
  // 2 sin(nu x) / (nu (e^{2x} - 1)) -> 1 - x + O(x^2) as x -> 0
  if (std::abs(x) < 1e-8) return om * (1.0 - x);
  return 2.0 * om * std::sin(nu * x) / (nu * (std::expm1(2.0 * x)));
}

double scalar_product_quadrature(const Coupling& c, double k1, double k2,
                                 double rel_tol) {
  require_oscillatory(c, "scalar_product_quadrature");
  double nu = c.nu;
  auto params = ordinary_params(c);
  auto psi = [&](double p, double k) {
    return hyp2f1(params, -(p * p) / (k * k)).real();
  };
  double klo = std::min(k1, k2), khi = std::max(k1, k2);
  double pmax = 50.0 * khi;
  auto f = [&](double p) { return p * p * psi(p, k1) * psi(p, k2); };
  double body = integrate_gk(f, 0.0, klo, rel_tol) +
                integrate_gk(f, klo, khi, rel_tol) +
                integrate_gk(f, khi, pmax, rel_tol);

  // Oscillatory tail: psi_i -> sum_s C_s (p/k_i)^{-5/2 + s i nu}, s = -+1,
  // C_- = Gamma(3/2)Gamma(-i nu)/(Gamma(5/4 - i nu/2)Gamma(1/4 - i nu/2)),
  // C_+ = conj(C_-); each cross term integrates in closed form.
  Complex cm = gamma_quotient({Complex(1.5, 0.0), Complex(0.0, -nu)},
                              {Complex(1.25, -0.5 * nu), Complex(0.25, -0.5 * nu)});
  Complex cp = std::conj(cm);
  Complex tail(0.0, 0.0);
  for (int s1 : {-1, +1}) {
    for (int s2 : {-1, +1}) {
      Complex c1 = (s1 < 0) ? cm : cp;
      Complex c2 = (s2 < 0) ? cm : cp;
      Complex e1 = Complex(2.5, -s1 * nu);
      Complex e2 = Complex(2.5, -s2 * nu);
      Complex mu(0.0, (s1 + s2) * nu);
      tail += c1 * c2 * std::exp(e1 * std::log(k1) + e2 * std::log(k2)) *
              std::exp((mu - 2.0) * std::log(pmax)) / (2.0 - mu);
    }
  }
  return body + tail.real();
}

SpectrumResult orthogonality_spectrum(const Coupling& c, double E1, int n_lo,
                                      int n_hi) {
  require_oscillatory(c, "orthogonality_spectrum");
  if (!(E1 < 0.0)) throw std::domain_error("orthogonality_spectrum: E1 must be < 0");
  if (n_lo > n_hi) throw std::domain_error("orthogonality_spectrum: empty range");
  SpectrumResult r;
  r.method = SpectrumMethod::orthogonality;
  r.units = SpectrumUnits::energy;
  r.params.kappa = c.kappa;
  r.params.e1 = E1;
  for (int n = n_lo; n <= n_hi; ++n) {
    r.levels.push_back(E1 * std::exp(-2.0 * n * kPi / c.nu));
    r.residuals.push_back(0.0);
  }
  return r;
}

Complex asymptotic_amplitude(const Coupling& c) {
  double nu = c.nu_real();
  return gamma_quotient({Complex(0.0, nu)},
                        {Complex(1.25, 0.5 * nu), Complex(0.25, 0.5 * nu)});
}

SpectrumResult cutoff_spectrum(const Coupling& c, double lambda_cut,
                               double mass, int n_lo, int n_hi,
                               double f_valid) {
  require_oscillatory(c, "cutoff_spectrum");
  if (!(lambda_cut > 0.0) || !(mass > 0.0))
    throw std::domain_error("cutoff_spectrum: need lambda_cut > 0, mass > 0");
  if (n_lo < 0 || n_lo > n_hi)
    throw std::domain_error("cutoff_spectrum: need 0 <= n_lo <= n_hi");
  double nu = c.nu;
  double arg_a = std::arg(asymptotic_amplitude(c));
  double scale = lambda_cut * lambda_cut / (2.0 * mass);
  SpectrumResult r;
  r.method = SpectrumMethod::cutoff;
  r.units = SpectrumUnits::energy;
  r.params.kappa = c.kappa;
  r.params.lambda_cut = lambda_cut;
  r.params.mass = mass;
  r.params.f_valid = f_valid;
  for (int n = n_lo; n <= n_hi; ++n) {
    double factor = std::exp((2.0 / nu) * (arg_a - (n + 0.5) * kPi));
    if (factor >= f_valid) continue; // outside the Lambda >> k domain
    r.levels.push_back(-scale * factor);
    r.residuals.push_back(0.0);
  }
  return r;
}

std::pair<Complex, Complex> characteristic_roots(const Coupling& c) {
  // 1 = 4 kappa [1/(s+3) - 1/(s+2)]  <=>  s^2 + 5 s + 6 + 4 kappa = 0
  Complex disc = std::sqrt(Complex(1.0 - 16.0 * c.kappa, 0.0));
  return {(-5.0 + disc) / 2.0, (-5.0 - disc) / 2.0};
}

double green_kernel_flat(double p, double pprime) {
  if (!(p > 0.0) || !(pprime > 0.0))
    throw std::domain_error("green_kernel_flat: need p, p' > 0");
  return 1.0 / std::max(p, pprime);
}

} // namespace minlen
