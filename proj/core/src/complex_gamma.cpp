#include "minlen/complex_gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace minlen {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos g = 607/128, 15 coefficients (Godfrey's set).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosCoef[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

// ln Gamma for Re(z) >= 0.5, where the Lanczos sum is well conditioned.
Complex ln_gamma_right(Complex z) {
  Complex zm1 = z - 1.0;
  Complex sum = kLanczosCoef[0];
  for (int k = 1; k < 15; ++k) sum += kLanczosCoef[k] / (zm1 + double(k));
  Complex t = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t +
         std::log(sum);
}

// log(sin(pi z)) without overflow for large |Im z|.
Complex log_sin_pi(Complex z) {
  const Complex i(0.0, 1.0);
  if (z.imag() > 0.0) {
    // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2 i)
    return -i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z)) -
           std::log(2.0 * i) + Complex(0.0, kPi);
  }
  // sin(pi z) = e^{i pi z} (1 - e^{-2 i pi z}) / (2 i)
  return i * kPi * z + std::log(1.0 - std::exp(-2.0 * i * kPi * z)) -
         std::log(2.0 * i);
}

} // namespace

bool is_gamma_pole(Complex z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

Complex ln_gamma(Complex z) {
  if (is_gamma_pole(z)) throw std::domain_error("ln_gamma: pole at nonpositive integer");
  if (z.real() >= 0.5) return ln_gamma_right(z);
  // Reflection: ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1-z),
  // exact modulo 2*pi*i.
  return std::log(kPi) - log_sin_pi(z) - ln_gamma_right(1.0 - z);
}

Complex gamma(Complex z) { return std::exp(ln_gamma(z)); }

Complex gamma_quotient(std::initializer_list<Complex> num,
                       std::initializer_list<Complex> den) {
  for (Complex d : den)
    if (is_gamma_pole(d)) return Complex(0.0, 0.0);
  Complex acc(0.0, 0.0);
  for (Complex n : num) acc += ln_gamma(n);
  for (Complex d : den) acc -= ln_gamma(d);
  return std::exp(acc);
}

} // namespace minlen
