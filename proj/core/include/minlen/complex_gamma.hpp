// Complex log-gamma via the Lanczos approximation, with reflection into the
// left half plane. Accuracy is ~1e-14 relative in exp(ln_gamma) for |z| <= 50,
// which covers every gamma this library needs (arguments like i*nu and
// 5/4 + i*nu/2 with nu at most a few tens).
#ifndef MINLEN_COMPLEX_GAMMA_HPP
#define MINLEN_COMPLEX_GAMMA_HPP

#include <complex>
#include <initializer_list>

namespace minlen {

using Complex = std::complex<double>;

/// Principal-branch log-gamma. Throws std::domain_error at the poles
/// (nonpositive integers). The reflection branch is continuous only up to
/// multiples of 2*pi*i; exp(ln_gamma(z)) is always Gamma(z).
Complex ln_gamma(Complex z);

/// Gamma(z) = exp(ln_gamma(z)).
Complex gamma(Complex z);

/// prod Gamma(num...) / prod Gamma(den...), computed in log space.
/// A pole in a denominator factor makes the quotient 0; a pole in a
/// numerator factor throws.
Complex gamma_quotient(std::initializer_list<Complex> num,
                       std::initializer_list<Complex> den);

/// True if z sits on a gamma pole (nonpositive integer within tol).
bool is_gamma_pole(Complex z, double tol = 1e-12);

} // namespace minlen

#endif
