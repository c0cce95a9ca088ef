#include "minlen/hyp2f1.hpp"

#include <cmath>
#include <stdexcept>

namespace minlen {

namespace {

constexpr int kMaxTerms = 100000;
constexpr double kSeriesTol = 1e-15;

bool near_integer(Complex z, double tol) {
  return std::abs(z.imag()) < tol &&
         std::abs(z.real() - std::round(z.real())) < tol;
}

bool is_nonpositive_integer(Complex z, double tol = 1e-13) {
  return near_integer(z, tol) && z.real() < 0.5;
}

bool is_zero(Complex z) { return z.real() == 0.0 && z.imag() == 0.0; }

// Defining power series. Terminates early for polynomial cases; stops when
// the last two terms are both below tol relative to the partial sum.
detail::Hyp2F1Eval series(Complex a, Complex b, Complex c, double x) {
  Complex term(1.0, 0.0);
  Complex sum(1.0, 0.0);
  double scale = 1.0;
  double prev_mag = 0.0;
  for (int n = 0; n < kMaxTerms; ++n) {
    term *= (a + double(n)) * (b + double(n)) * x /
            ((c + double(n)) * double(n + 1));
    sum += term;
    double mag = std::abs(term);
    scale = std::max(scale, std::abs(sum));
    double bound = kSeriesTol * std::max(std::abs(sum), 1e-300);
    if (mag <= bound && prev_mag <= bound) return {sum, scale};
    prev_mag = mag;
  }
  throw std::runtime_error("hyp2f1: series did not converge");
}

// Pfaff transformation: F(a,b,c;x) = (1-x)^{-a} F(a, c-b, c; x/(x-1)).
detail::Hyp2F1Eval pfaff(Complex a, Complex b, Complex c, double x) {
  double y = x / (x - 1.0);
  Complex pre = std::exp(-a * std::log1p(-x));
  auto s = series(a, c - b, c, y);
  return {pre * s.value, std::abs(pre) * s.scale};
}

// Large-|x| connection, x < 0:
//   F(a,b,c;x) = G(c,b-a;b,c-a) (-x)^{-a} F(a,1-c+a,1-b+a;1/x)
//              + G(c,a-b;a,c-b) (-x)^{-b} F(b,1-c+b,1-a+b;1/x)
detail::Hyp2F1Eval inversion(Complex a, Complex b, Complex c, double x) {
  double lx = std::log(-x);
  Complex coef1 = gamma_quotient({c, b - a}, {b, c - a});
  Complex coef2 = gamma_quotient({c, a - b}, {a, c - b});
  detail::Hyp2F1Eval out{{0.0, 0.0}, 0.0};
  if (!is_zero(coef1)) {
    auto s = series(a, 1.0 - c + a, 1.0 - b + a, 1.0 / x);
    Complex pre = coef1 * std::exp(-a * lx);
    out.value += pre * s.value;
    out.scale += std::abs(pre) * s.scale;
  }
  if (!is_zero(coef2)) {
    auto s = series(b, 1.0 - c + b, 1.0 - a + b, 1.0 / x);
    Complex pre = coef2 * std::exp(-b * lx);
    out.value += pre * s.value;
    out.scale += std::abs(pre) * s.scale;
  }
  return out;
}

// Connection in 1-x for 1/2 < x < 1, c-a-b not an integer:
//   F(a,b,c;x) = G(c,c-a-b;c-a,c-b) F(a,b,a+b-c+1;1-x)
//              + (1-x)^{c-a-b} G(c,a+b-c;a,b) F(c-a,c-b,c-a-b+1;1-x)
detail::Hyp2F1Eval connection_1mx(Complex a, Complex b, Complex c, double x) {
  double s1 = 1.0 - x;
  Complex coef1 = gamma_quotient({c, c - a - b}, {c - a, c - b});
  Complex coef2 = gamma_quotient({c, a + b - c}, {a, b});
  detail::Hyp2F1Eval out{{0.0, 0.0}, 0.0};
  if (!is_zero(coef1)) {
    auto s = series(a, b, a + b - c + 1.0, s1);
    out.value += coef1 * s.value;
    out.scale += std::abs(coef1) * s.scale;
  }
  if (!is_zero(coef2)) {
    auto s = series(c - a, c - b, c - a - b + 1.0, s1);
    Complex pre = coef2 * std::exp((c - a - b) * std::log(s1));
    out.value += pre * s.value;
    out.scale += std::abs(pre) * s.scale;
  }
  return out;
}

} // namespace

namespace detail {

Hyp2F1Eval hyp2f1_eval(Complex a, Complex b, Complex c, double x) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("hyp2f1: c is a nonpositive integer");
  if (!std::isfinite(x)) throw std::domain_error("hyp2f1: non-finite argument");
  if (is_zero(a) || is_zero(b) || x == 0.0) return {Complex(1.0, 0.0), 1.0};

  // F(a,b,b;x) = (1-x)^{-a}
  if (std::abs(b - c) < 1e-14 * (1.0 + std::abs(c))) {
    if (x >= 1.0) throw std::domain_error("hyp2f1: argument on branch cut");
    Complex v = std::exp(-a * std::log1p(-x));
    return {v, std::abs(v)};
  }
  if (std::abs(a - c) < 1e-14 * (1.0 + std::abs(c))) {
    if (x >= 1.0) throw std::domain_error("hyp2f1: argument on branch cut");
    Complex v = std::exp(-b * std::log1p(-x));
    return {v, std::abs(v)};
  }

  // Terminating series works for any x.
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    return series(a, b, c, x);

  if (x >= 1.0) throw std::domain_error("hyp2f1: argument on branch cut");

  if (x < 0.0) {
    // Pfaff argument y = x/(x-1) stays below 0.85 for x >= -17/3.
    if (x >= -17.0 / 3.0) return pfaff(a, b, c, x);
    if (near_integer(b - a, 1e-8)) return pfaff(a, b, c, x);
    return inversion(a, b, c, x);
  }
  if (x <= 0.5) return series(a, b, c, x);

  if (!near_integer(c - a - b, 1e-8)) return connection_1mx(a, b, c, x);
  if (x <= 0.95) return series(a, b, c, x);
  throw std::runtime_error(
      "hyp2f1: x near 1 with integer c-a-b is not supported");
}

} // namespace detail

Complex hyp2f1(Complex a, Complex b, Complex c, double x) {
  return detail::hyp2f1_eval(a, b, c, x).value;
}

Complex hyp2f1(const Hyp2F1Params& p, double x) {
  return detail::hyp2f1_eval(p.a, p.b, p.c, x).value;
}

Complex hyp2f1_derivative(const Hyp2F1Params& p, double x) {
  return p.a * p.b / p.c * hyp2f1(p.a + 1.0, p.b + 1.0, p.c + 1.0, x);
}

} // namespace minlen
