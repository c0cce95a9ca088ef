// Gauss hypergeometric 2F1 with complex parameters and real argument,
// evaluated anywhere on the real line left of the x=1 branch point.
//
// Region map:
//   0 <= x <= 1/2            direct series
//   -17/3 <= x < 0           Pfaff x -> x/(x-1), series argument in (0, 0.85]
//   x < -17/3                inversion x -> 1/x (the large-argument connection
//                            formula), falling back to the Pfaff series when
//                            b-a is too close to an integer
//   1/2 < x < 1              connection in 1-x; direct series fallback when
//                            c-a-b is close to an integer
//   x >= 1                   rejected (branch cut)
//
// Schwarz symmetry holds on every path: conjugating (a,b,c) conjugates the
// result to rounding accuracy.
#ifndef MINLEN_HYP2F1_HPP
#define MINLEN_HYP2F1_HPP

#include <complex>

#include "minlen/complex_gamma.hpp"

namespace minlen {

struct Hyp2F1Params {
  Complex a, b, c;
};

/// 2F1(a,b;c;x) for real x < 1 (and x in (1/2,1) only when the 1-x connection
/// or the series applies). Throws std::domain_error when c is a nonpositive
/// integer or x is on the branch cut, std::runtime_error on non-convergence.
Complex hyp2f1(Complex a, Complex b, Complex c, double x);
Complex hyp2f1(const Hyp2F1Params& p, double x);

/// d/dx 2F1(a,b;c;x) = (a b / c) 2F1(a+1,b+1;c+1;x).
Complex hyp2f1_derivative(const Hyp2F1Params& p, double x);

namespace detail {

struct Hyp2F1Eval {
  Complex value;
  double scale; // max partial-sum magnitude times prefactors; cancellation scale
};

Hyp2F1Eval hyp2f1_eval(Complex a, Complex b, Complex c, double x);

} // namespace detail

} // namespace minlen

#endif
