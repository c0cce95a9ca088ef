#include "minlen/heun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minlen/ode.hpp"

namespace minlen {

namespace {

constexpr int kMaxTerms = 100000;

// Next coefficient from the three-term recurrence
//   (n+2)(n+1+c) xi0 C_{n+2} = {(n+1)^2 (xi0+1)
//       + (n+1)[c+d-1+(a+b-d) xi0] - q} C_{n+1} - (n+a)(n+b) C_n .
// (n+a)(n+b) = n^2 + n(a+b) + ab is real for the admitted parameter class.
double next_coefficient(const HeunParams& p, int n, double cn, double cn1) {
  double s = p.ab_sum();
  double prod = p.ab_prod();
  double np1 = double(n + 1);
  double bracket = np1 * np1 * (p.xi0 + 1.0) +
                   np1 * (p.c + p.d - 1.0 + (s - p.d) * p.xi0) - p.q;
  double quad = double(n) * double(n) + double(n) * s + prod;
  return (bracket * cn1 - quad * cn) / (double(n + 2) * (double(n + 1) + p.c) * p.xi0);
}

} // namespace

double HeunParams::fuchsian_residual() const {
  return ab_sum() + 1.0 - (c + d + e);
}

void HeunParams::validate() const {
  if (xi0 == 0.0 || xi0 == 1.0)
    throw std::domain_error("heun: xi0 must not be 0 or 1");
  double scale = 1.0 + std::abs(c) + std::abs(d) + std::abs(e) + std::abs(a) + std::abs(b);
  if (std::abs(fuchsian_residual()) > 1e-12 * scale)
    throw std::domain_error("heun: parameters violate the Fuchsian condition");
  if (std::abs((a + b).imag()) > 1e-12 * scale ||
      std::abs((a * b).imag()) > 1e-12 * scale * scale)
    throw std::domain_error("heun: a,b must be real or a conjugate pair");
  double cr = std::round(c);
  if (c < 0.5 && std::abs(c - cr) < 1e-12)
    throw std::domain_error("heun: c is a nonpositive integer");
}

double heun_radius(const HeunParams& p) {
  return std::min(1.0, std::abs(p.xi0));
}

std::vector<double> heun_coefficients(const HeunParams& p, int n_max) {
  p.validate();
  if (n_max < 2) throw std::domain_error("heun_coefficients: n_max must be >= 2");
  std::vector<double> coef(n_max + 1);
  coef[0] = 1.0;
  coef[1] = -p.q / (p.c * p.xi0);
  for (int n = 0; n + 2 <= n_max; ++n)
    coef[n + 2] = next_coefficient(p, n, coef[n], coef[n + 1]);
  return coef;
}

double heun_local(const HeunParams& p, double xi, double tol) {
  p.validate();
  if (std::abs(xi) >= heun_radius(p))
    throw std::domain_error("heun_local: xi outside the disc of convergence");
  if (xi == 0.0) return 1.0;

  double cn = 1.0;
  double cn1 = -p.q / (p.c * p.xi0);
  double sum = cn + cn1 * xi;
  double xpow = xi;
  double prev_mag = std::abs(cn1 * xi);
  for (int n = 0; n < kMaxTerms; ++n) {
    double cn2 = next_coefficient(p, n, cn, cn1);
    xpow *= xi;
    double term = cn2 * xpow;
    sum += term;
    double bound = tol * std::max(std::abs(sum), 1e-300);
    if (std::abs(term) <= bound && prev_mag <= bound) return sum;
    prev_mag = std::abs(term);
    cn = cn1;
    cn1 = cn2;
  }
  throw std::runtime_error("heun_local: series did not converge");
}

HeunState heun_ode_eval(const HeunParams& p, double xi_start, double f_start,
                        double fprime_start, double xi_end, double rel_tol,
                        double delta_sing) {
  p.validate();
  if (xi_start == xi_end) return {f_start, fprime_start};
  double lo = std::min(xi_start, xi_end);
  double hi = std::max(xi_start, xi_end);
  for (double s : {0.0, 1.0, p.xi0}) {
    double dist = (s < lo) ? lo - s : (s > hi) ? s - hi : 0.0;
    if (dist < delta_sing)
      throw std::domain_error("heun_ode_eval: path too close to a singular point");
  }
  double prod = p.ab_prod();
  auto rhs = [&p, prod](const ode::State2& y, ode::State2& dydx, double xi) {
    double pcoef = p.c / xi + p.e / (xi - 1.0) + p.d / (xi - p.xi0);
    double qcoef = (prod * xi + p.q) / (xi * (xi - 1.0) * (xi - p.xi0));
    dydx[0] = y[1];
    dydx[1] = -pcoef * y[1] - qcoef * y[0];
  };
  auto y = ode::integrate(rhs, ode::State2{f_start, fprime_start}, xi_start,
                          xi_end, rel_tol, 1e-14);
  return {y[0], y[1]};
}

} // namespace minlen
