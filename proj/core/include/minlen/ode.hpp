// Adaptive ODE integration for second-order scalar problems written as
// two-component first-order systems. Thin wrapper over an embedded
// Dormand-Prince 5(4) controlled stepper.
#ifndef MINLEN_ODE_HPP
#define MINLEN_ODE_HPP

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include <boost/numeric/odeint.hpp>

namespace minlen::ode {

using State2 = std::array<double, 2>;

template <typename Rhs>
State2 integrate(Rhs&& rhs, State2 y, double x0, double x1,
                 double rel_tol = 1e-12, double abs_tol = 1e-14) {
  namespace odeint = boost::numeric::odeint;
  if (x0 == x1) return y;
  auto stepper =
      odeint::make_controlled<odeint::runge_kutta_dopri5<State2>>(abs_tol,
                                                                  rel_tol);
  double span = std::abs(x1 - x0);
  double dt = (x1 > x0 ? 1.0 : -1.0) * std::min(0.01 * span, 0.1 * std::abs(x0) + 1e-4 * span);
  if (dt == 0.0) dt = (x1 > x0 ? 1.0 : -1.0) * 1e-3 * span;
  odeint::integrate_adaptive(stepper, std::forward<Rhs>(rhs), y, x0, x1, dt);
  return y;
}

/// Integrates from x0 through the sorted sample points xs, recording the
/// state at each one.
template <typename Rhs>
std::vector<State2> integrate_sampled(Rhs&& rhs, State2 y, double x0,
                                      std::span<const double> xs,
                                      double rel_tol = 1e-12,
                                      double abs_tol = 1e-14) {
  std::vector<State2> out;
  out.reserve(xs.size());
  double x = x0;
  for (double xe : xs) {
    y = integrate(rhs, y, x, xe, rel_tol, abs_tol);
    out.push_back(y);
    x = xe;
  }
  return out;
}

} // namespace minlen::ode

#endif
