#include "minlen/integral_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "minlen/hyp2f1.hpp"
#include "minlen/parallel.hpp"
#include "minlen/quadrature.hpp"

namespace minlen {

namespace {

void append_panel(KernelGrid& g, const GaussLegendreRule& rule, double a,
                  double b, bool log_domain) {
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double t = 0.5 * (b - a) * rule.nodes[i] + 0.5 * (a + b);
    double w = 0.5 * (b - a) * rule.weights[i];
    if (log_domain) {
      g.nodes.push_back(std::exp(t));
      g.weights.push_back(std::exp(t) * w);
    } else {
      g.nodes.push_back(t);
      g.weights.push_back(w);
    }
  }
}

void check_grid_inputs(double lo, double hi) {
  if (!(lo > 0.0) || !(hi > lo))
    throw std::domain_error("kernel grid: need 0 < lo < hi");
}

// Dimensionless kernel g(q) = (1/q) F(-1/2, omega4, 1/2; -q^2) - C~, equal to
// the decaying homogeneous solution int_q^inf ds / (s^2 (1+s^2)^{omega4}).
// The hypergeometric route degenerates near omega4 = 1/2 at large argument
// (the connection coefficients pivot on Gamma(omega4 - 1/2)); there the
// integral form is evaluated instead. omega4 = 0 and 1/2 are closed forms.
double gtilde(double omega4, double q) {
  if (omega4 < 1e-14) return 1.0 / q;
  if (std::abs(omega4 - 0.5) < 1e-14)
    return std::sqrt(1.0 + q * q) / q - 1.0;
  double u = q * q;
  double ctilde = std::exp(std::lgamma(0.5) + std::lgamma(0.5 + omega4) -
                           std::lgamma(omega4));
  if (u <= 9.0 || std::abs(omega4 - 0.5) >= 0.02) {
    Complex f = hyp2f1(Complex(-0.5, 0.0), Complex(omega4, 0.0),
                       Complex(0.5, 0.0), -u);
    return f.real() / q - ctilde;
  }
  auto integrand = [omega4, q](double t) {
    return std::pow(t * t / (t * t + q * q), omega4);
  };
  return integrate_gk(integrand, 0.0, 1.0, 1e-12) / q;
}

Eigen::MatrixXd kernel_matrix(double omega4, const KernelGrid& grid) {
  const auto& q = grid.nodes;
  int n = int(q.size());
  std::vector<double> g(n);
  parallel_for(std::size_t(n), [&](std::size_t i) { g[i] = gtilde(omega4, q[i]); });
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = g[std::max(i, j)];
  return G;
}

} // namespace

KernelGrid make_log_grid(double lo, double hi, int points_per_decade) {
  check_grid_inputs(lo, hi);
  if (points_per_decade < 2)
    throw std::domain_error("make_log_grid: points_per_decade < 2");
  KernelGrid g;
  g.map = GridMap::log;
  auto rule = gauss_legendre(points_per_decade);
  double ulo = std::log(lo), uhi = std::log(hi);
  int panels = std::max(1, int(std::ceil((uhi - ulo) / std::log(10.0))));
  for (int i = 0; i < panels; ++i) {
    double a = ulo + (uhi - ulo) * i / panels;
    double b = ulo + (uhi - ulo) * (i + 1) / panels;
    append_panel(g, rule, a, b, true);
  }
  return g;
}

KernelGrid make_linear_grid(double lo, double hi, int n) {
  check_grid_inputs(lo, hi);
  if (n < 2) throw std::domain_error("make_linear_grid: n < 2");
  KernelGrid g;
  g.map = GridMap::linear;
  int panels = std::max(1, (n + 15) / 16);
  auto rule = gauss_legendre(std::max(2, n / panels));
  for (int i = 0; i < panels; ++i) {
    double a = lo + (hi - lo) * i / panels;
    double b = lo + (hi - lo) * (i + 1) / panels;
    append_panel(g, rule, a, b, false);
  }
  return g;
}

KernelGrid make_compactified_grid(double lo, double hi, int points_per_decade,
                                  int n_tail) {
  KernelGrid g = make_log_grid(lo, hi, points_per_decade);
  g.map = GridMap::rational;
  if (n_tail < 2) throw std::domain_error("make_compactified_grid: n_tail < 2");
  // tail: q = hi/s, int_hi^inf f dq = int_0^1 f(hi/s) hi/s^2 ds
  auto rule = gauss_legendre(n_tail);
  std::vector<std::pair<double, double>> tail;
  for (int i = 0; i < n_tail; ++i) {
    double s = 0.5 * rule.nodes[i] + 0.5;
    double w = 0.5 * rule.weights[i];
    tail.emplace_back(hi / s, w * hi / (s * s));
  }
  std::sort(tail.begin(), tail.end());
  for (auto& [node, weight] : tail) {
    g.nodes.push_back(node);
    g.weights.push_back(weight);
  }
  return g;
}

double green_kernel_deformed(const Deformation& d, double p, double pprime) {
  if (!(p > 0.0) || !(pprime > 0.0))
    throw std::domain_error("green_kernel_deformed: need p, p' > 0");
  double om1 = d.omega1();
  if (!(om1 > 0.0))
    throw std::domain_error("green_kernel_deformed: beta + beta' must be > 0");
  double s = std::sqrt(om1);
  return s * gtilde(d.omega4(), s * std::max(p, pprime));
}

CouplingEigencurve nystrom_eigencurve(const Deformation& d,
                                      const std::vector<double>& omega_samples,
                                      const KernelGrid& grid, int n_eigs) {
  if (n_eigs < 1) throw std::domain_error("nystrom_eigencurve: n_eigs < 1");
  for (double w : omega_samples)
    if (!(w > 0.0)) throw std::domain_error("nystrom_eigencurve: omega must be > 0");
  double om4 = d.omega4();
  Eigen::MatrixXd G = kernel_matrix(om4, grid);
  const auto& q = grid.nodes;
  int n = int(q.size());

  CouplingEigencurve curve;
  curve.omega_samples = omega_samples;
  curve.kappa_eigenvalues.resize(omega_samples.size());

  parallel_for(omega_samples.size(), [&](std::size_t k) {
    double omega = omega_samples[k];
    Eigen::VectorXd s(n);
    for (int i = 0; i < n; ++i) {
      double u = q[i] * q[i];
      double m = u * std::pow(1.0 + u, om4 - 2.0) / (u + 2.0 * omega);
      s(i) = std::sqrt(grid.weights[i] * m);
    }
    Eigen::MatrixXd S = s.asDiagonal() * G * s.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
    std::vector<double> kappas;
    for (int i = n - 1; i >= 0 && int(kappas.size()) < n_eigs; --i) {
      double mu = es.eigenvalues()(i);
      if (mu <= 0.0) break;
      kappas.push_back(1.0 / (4.0 * mu));
    }
    curve.kappa_eigenvalues[k] = std::move(kappas);
  });
  return curve;
}

std::vector<double> nystrom_bound_states(double kappa, const Deformation& d,
                                         const KernelGrid& grid,
                                         int max_levels) {
  if (!(kappa > 0.0))
    throw std::domain_error("nystrom_bound_states: kappa must be > 0");
  if (max_levels < 1)
    throw std::domain_error("nystrom_bound_states: max_levels < 1");
  double om4 = d.omega4();
  Eigen::MatrixXd G = kernel_matrix(om4, grid);
  const auto& q = grid.nodes;
  int n = int(q.size());
  Eigen::VectorXd s(n);
  for (int i = 0; i < n; ++i) {
    double u = q[i] * q[i];
    s(i) = std::sqrt(grid.weights[i] * u * std::pow(1.0 + u, om4 - 2.0));
  }
  Eigen::MatrixXd H = 4.0 * kappa * (s.asDiagonal() * G * s.asDiagonal());
  for (int i = 0; i < n; ++i) H(i, i) -= q[i] * q[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
  // positive eigenvalues are 2 omega_n; drop anything the grid cannot resolve
  double floor = 5.0 * grid.nodes.front() * grid.nodes.front();
  std::vector<double> levels;
  for (int i = n - 1; i >= 0 && int(levels.size()) < max_levels; --i) {
    double two_omega = es.eigenvalues()(i);
    if (two_omega <= 0.0) break;
    double omega = 0.5 * two_omega;
    if (omega < floor) break;
    levels.push_back(omega);
  }
  return levels;
}

std::vector<double> nystrom_flat(double k, const KernelGrid& grid,
                                 double lambda_cut) {
  if (!(k > 0.0)) throw std::domain_error("nystrom_flat: k must be > 0");
  const auto& p = grid.nodes;
  int n = int(p.size());
  if (lambda_cut > 0.0 && p.back() > lambda_cut)
    throw std::domain_error("nystrom_flat: grid extends beyond lambda_cut");
  Eigen::VectorXd s(n);
  for (int i = 0; i < n; ++i) {
    double u = p[i] * p[i];
    s(i) = std::sqrt(grid.weights[i] * u / (u + k * k));
  }
  Eigen::MatrixXd S(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double g = 1.0 / p[std::max(i, j)];
      if (lambda_cut > 0.0) g -= 1.0 / lambda_cut;
      S(i, j) = s(i) * g * s(j);
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::EigenvaluesOnly);
  std::vector<double> lambdas;
  for (int i = n - 1; i >= 0; --i) {
    double mu = es.eigenvalues()(i);
    if (mu <= 0.0) break;
    lambdas.push_back(1.0 / mu);
  }
  return lambdas;
}

} // namespace minlen
