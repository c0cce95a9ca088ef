// Bracketing root refinement (TOMS 748) and grid helpers for sign-change
// scans.
#ifndef MINLEN_ROOTS_HPP
#define MINLEN_ROOTS_HPP

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

namespace minlen {

/// Refines a root inside [lo, hi] given f(lo), f(hi) of opposite sign, to
/// |hi-lo| <= rel_tol * |root|.
template <typename F>
double refine_root(F&& f, double lo, double hi, double flo, double fhi,
                   double rel_tol = 1e-10) {
  auto tol = [rel_tol](double a, double b) {
    return std::abs(b - a) <= rel_tol * std::min(std::abs(a), std::abs(b));
  };
  std::uintmax_t max_iter = 200;
  auto r = boost::math::tools::toms748_solve(std::forward<F>(f), lo, hi, flo,
                                             fhi, tol, max_iter);
  return 0.5 * (r.first + r.second);
}

inline std::vector<double> linear_spaced(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * double(i) / double(n - 1);
  return g;
}

inline std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> g(n);
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * double(i) / double(n - 1));
  return g;
}

/// Log grid with a fixed density per decade (at least 2 points).
inline std::vector<double> log_grid_per_decade(double lo, double hi,
                                               int per_decade) {
  double decades = std::log10(hi / lo);
  int n = std::max(2, int(std::ceil(decades * per_decade)) + 1);
  return log_spaced(lo, hi, n);
}

} // namespace minlen

#endif
