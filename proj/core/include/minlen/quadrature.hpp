// Gauss-Legendre rules (runtime order, Golub-Welsch) and adaptive
// Gauss-Kronrod integration.
#ifndef MINLEN_QUADRATURE_HPP
#define MINLEN_QUADRATURE_HPP

#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace minlen {

struct GaussLegendreRule {
  std::vector<double> nodes;   // on [-1, 1], ascending
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

template <typename F>
double integrate_gk(F&& f, double a, double b, double rel_tol = 1e-10,
                    int max_depth = 15) {
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, max_depth, rel_tol);
}

} // namespace minlen

#endif
