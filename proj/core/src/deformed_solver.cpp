#include "minlen/deformed_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "minlen/ode.hpp"
#include "minlen/ordinary_qm.hpp"
#include "minlen/parallel.hpp"
#include "minlen/roots.hpp"

namespace minlen {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kGridPerDecade = 40;

void check_omega_window(double omega_min, double omega_max) {
  if (!(omega_min > 0.0) || !(omega_min < omega_max) || !(omega_max < 0.5))
    throw std::domain_error("spectrum window must satisfy 0 < omega_min < omega_max < 1/2");
}

// Scaled quantization function. For omega >= 0.075 the Pfaff series argument
// 1 - 2 omega stays below 0.85 and the generic evaluator is used. Below that
// the large-argument connection is applied in explicitly phase-scaled form:
// with nu~ = i t,
//   h |x|^{5/4} = 2 Re[ G(3/2, it; 5/4+it/2, 1/4+it/2)
//                       e^{i (t/2) ln|x|} S(1/x) ],
// which stays O(1) for arbitrarily small omega.
double h_scaled_impl(double kappa, double omega) {
  if (!(kappa > 0.0)) throw std::domain_error("quantization_h: kappa must be > 0");
  if (!(omega > 0.0) || !(omega < 0.5))
    throw std::domain_error("quantization_h: requires 0 < omega < 1/2");
  double x = (2.0 * omega - 1.0) / (2.0 * omega);
  double rad = 0.25 - 4.0 * kappa / (1.0 - 2.0 * omega); // nu~^2
  if (omega >= 0.075 || rad >= 0.0) {
    Complex nu_tilde = std::sqrt(Complex(rad, 0.0));
    Complex a = Complex(1.25, 0.0) - nu_tilde / 2.0;
    Complex b = Complex(1.25, 0.0) + nu_tilde / 2.0;
    auto ev = detail::hyp2f1_eval(a, b, Complex(1.5, 0.0), x);
    double scale = std::max(std::abs(ev.value), 1e-6 * ev.scale);
    if (std::abs(ev.value.imag()) > 1e-10 * scale)
      throw std::runtime_error("quantization_h: evaluation lost reality");
    return ev.value.real() * std::pow(std::abs(x), 1.25);
  }
  double t = std::sqrt(-rad);
  Complex a(1.25, -0.5 * t);
  Complex b(1.25, 0.5 * t);
  Complex c(1.5, 0.0);
  Complex coef = gamma_quotient({c, b - a}, {b, c - a});
  Complex s = hyp2f1(a, 1.0 - c + a, 1.0 - b + a, 1.0 / x);
  Complex phase = std::exp(Complex(0.0, 0.5 * t * std::log(-x)));
  return 2.0 * (coef * phase * s).real();
}

// Frobenius coefficients of the regular solution at q = 0:
// psi = 1 + c2 q^2 + c4 q^4 + O(q^6).
struct FrobeniusStart {
  double c2, c4;
};

FrobeniusStart frobenius_start(double kappa, double omega, double omega4) {
  double c2 = -(3.0 + 2.0 * kappa) / (6.0 * omega);
  double p1 = 1.0 / omega + omega4;
  double q0 = (3.0 + 2.0 * kappa) / omega;
  double q1 = (2.0 * omega4 - 4.0 * kappa) / omega -
              (3.0 + 2.0 * kappa) / (2.0 * omega * omega);
  double c4 = -(4.0 * c2 * p1 + q1 + q0 * c2) / 20.0;
  return {c2, c4};
}

// Deformed radial ODE in q = sqrt(beta+beta') p:
//   psi'' + (2/q) P(q^2) psi' + Q(q^2) psi = 0,
//   P(u) = 4 (u+omega)/(u+2 omega) - (1+(1-omega4) u)/(1+u),
//   Q(u) = [(6+(6+4 omega4) u)/(1+u) + 4 kappa/(1+u)^2] / (u+2 omega).
struct DeformedRhs {
  double kappa, omega, omega4;
  void operator()(const ode::State2& y, ode::State2& dydq, double q) const {
    double u = q * q;
    double P = 4.0 * (u + omega) / (u + 2.0 * omega) -
               (1.0 + (1.0 - omega4) * u) / (1.0 + u);
    double Q = ((6.0 + (6.0 + 4.0 * omega4) * u) / (1.0 + u) +
                4.0 * kappa / ((1.0 + u) * (1.0 + u))) /
               (u + 2.0 * omega);
    dydq[0] = y[1];
    dydq[1] = -(2.0 / q) * P * y[1] - Q * y[0];
  }
};

double auto_q_min(double c2) {
  return std::min(1e-3, std::sqrt(1e-4 / std::abs(c2)));
}

ode::State2 frobenius_state(const FrobeniusStart& fs, double q) {
  double u = q * q;
  return {1.0 + fs.c2 * u + fs.c4 * u * u,
          2.0 * fs.c2 * q + 4.0 * fs.c4 * u * q};
}

template <typename H>
SpectrumResult find_levels(H&& h, double omega_min, double omega_max,
                           int max_levels, SpectrumMethod method,
                           double rel_tol) {
  check_omega_window(omega_min, omega_max);
  if (max_levels < 1) throw std::domain_error("max_levels must be >= 1");
  SpectrumResult r;
  r.method = method;
  r.units = SpectrumUnits::omega;
  r.params.omega_min = omega_min;
  r.params.omega_max = omega_max;

  auto grid = log_grid_per_decade(omega_min, omega_max, kGridPerDecade);
  std::vector<double> vals(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { vals[i] = h(grid[i]); });

  for (int i = int(grid.size()) - 2; i >= 0; --i) {
    if (int(r.levels.size()) >= max_levels) return r;
    double flo = vals[i], fhi = vals[i + 1];
    if (flo == 0.0) continue; // counted as the lower edge of the next bracket
    double root, res;
    if (fhi == 0.0) {
      root = grid[i + 1];
      res = 0.0;
    } else if (flo * fhi < 0.0) {
      root = refine_root(h, grid[i], grid[i + 1], flo, fhi, rel_tol);
      res = std::abs(h(root));
    } else {
      continue;
    }
    r.levels.push_back(root);
    r.residuals.push_back(res);
  }
  r.window_exhausted = int(r.levels.size()) < max_levels;
  return r;
}

} // namespace

double quantization_h_scaled(double kappa, double omega) {
  return h_scaled_impl(kappa, omega);
}

double quantization_h(double kappa, double omega) {
  double x = (2.0 * omega - 1.0) / (2.0 * omega);
  return h_scaled_impl(kappa, omega) * std::pow(std::abs(x), -1.25);
}

QuantizationScan scan_quantization(double kappa, double omega_min,
                                   double omega_max, int n_points,
                                   bool log_spacing) {
  check_omega_window(omega_min, omega_max);
  if (n_points < 2) throw std::domain_error("scan_quantization: n_points < 2");
  QuantizationScan scan;
  scan.kappa = kappa;
  scan.method = ScanMethod::hypergeometric_exact;
  auto grid = log_spacing ? log_spaced(omega_min, omega_max, n_points)
                          : linear_spaced(omega_min, omega_max, n_points);
  scan.grid.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    scan.grid[i] = {grid[i], quantization_h(kappa, grid[i])};
  });
  return scan;
}

SpectrumResult find_spectrum_exact(double kappa, double omega_min,
                                   double omega_max, int max_levels,
                                   double rel_tol) {
  check_omega_window(omega_min, omega_max);
  if (!(kappa > 0.0)) throw std::domain_error("find_spectrum_exact: kappa must be > 0");
  SpectrumResult r;
  if (kappa <= 1.0 / 16.0) {
    r.method = SpectrumMethod::exact_deformed;
    r.units = SpectrumUnits::omega;
    r.params.kappa = kappa;
    r.params.omega_min = omega_min;
    r.params.omega_max = omega_max;
    r.window_exhausted = true;
    return r;
  }
  r = find_levels([kappa](double w) { return h_scaled_impl(kappa, w); },
                  omega_min, omega_max, max_levels,
                  SpectrumMethod::exact_deformed, rel_tol);
  r.params.kappa = kappa;
  return r;
}

std::vector<double> asymptotic_levels_omega(double kappa, int n_lo, int n_hi,
                                            double f_valid) {
  auto c = Coupling::make(kappa);
  double nu = c.nu_real();
  if (nu < 1e-4)
    throw std::domain_error(
        "asymptotic_levels_omega: too close to the critical coupling");
  if (n_lo < 0 || n_lo > n_hi)
    throw std::domain_error("asymptotic_levels_omega: need 0 <= n_lo <= n_hi");
  double arg_a = std::arg(asymptotic_amplitude(c));
  std::vector<double> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    double w = 0.5 * std::exp((2.0 / nu) * (arg_a - (n + 0.5) * kPi));
    if (w < 0.5 * f_valid) out.push_back(w);
  }
  return out;
}

SpectrumResult asymptotic_spectrum(double kappa, const Deformation& d,
                                   double mass, int n_lo, int n_hi,
                                   double f_valid) {
  if (d.beta + d.beta_prime <= 0.0)
    throw std::domain_error("asymptotic_spectrum: beta + beta' must be > 0");
  if (!(mass > 0.0)) throw std::domain_error("asymptotic_spectrum: mass must be > 0");
  auto omegas = asymptotic_levels_omega(kappa, n_lo, n_hi, f_valid);
  SpectrumResult r;
  r.method = SpectrumMethod::asymptotic_deformed;
  r.units = SpectrumUnits::energy;
  r.params.kappa = kappa;
  r.params.beta = d.beta;
  r.params.beta_prime = d.beta_prime;
  r.params.mass = mass;
  r.params.f_valid = f_valid;
  double scale = 1.0 / (mass * d.omega1());
  for (double w : omegas) {
    r.levels.push_back(-w * scale);
    r.residuals.push_back(0.0);
  }
  return r;
}

ShootingResult shoot_deformed(double kappa, const Deformation& d, double omega,
                              double q_min, double q_max) {
  if (!(kappa > 0.0)) throw std::domain_error("shoot_deformed: kappa must be > 0");
  if (d.beta + d.beta_prime <= 0.0)
    throw std::domain_error("shoot_deformed: beta + beta' must be > 0");
  if (!(omega > 0.0)) throw std::domain_error("shoot_deformed: omega must be > 0");
  if (!(q_max > 20.0)) throw std::domain_error("shoot_deformed: q_max too small");
  double om4 = d.omega4();
  auto fs = frobenius_start(kappa, omega, om4);
  if (q_min <= 0.0) q_min = auto_q_min(fs.c2);

  constexpr int kFitPoints = 48;
  auto samples = log_spaced(q_max / 10.0, q_max, kFitPoints);
  DeformedRhs rhs{kappa, omega, om4};
  auto states = ode::integrate_sampled(rhs, frobenius_state(fs, q_min), q_min,
                                       samples, 1e-12, 1e-300);

  // Tail basis: the asymptotic series of the two solutions advances in
  // powers of q^{-2}; fitting {q^{-2}, q^{-4}, q^{-(3+2 omega4)}} absorbs the
  // first correction to the slow branch. At omega4 = 1/2 the second and
  // third columns coincide, so a pure even basis is used.
  double tail_exp = 3.0 + 2.0 * om4;
  bool merged = std::abs(1.0 - 2.0 * om4) < 1e-3;
  std::array<double, 3> exps =
      merged ? std::array<double, 3>{-2.0, -4.0, -6.0}
             : std::array<double, 3>{-2.0, -4.0, -tail_exp};
  double q_ref = std::sqrt(samples.front() * samples.back());

  Eigen::MatrixXd A(kFitPoints, 3);
  Eigen::VectorXd bvec(kFitPoints);
  for (int i = 0; i < kFitPoints; ++i) {
    for (int j = 0; j < 3; ++j) A(i, j) = std::pow(samples[i] / q_ref, exps[j]);
    bvec(i) = states[i][0];
  }
  Eigen::Vector3d coef = A.colPivHouseholderQr().solve(bvec);
  double resid = (A * coef - bvec).norm() / std::max(bvec.norm(), 1e-300);

  ShootingResult out;
  out.q_ref = q_ref;
  out.fit_residual = resid;
  out.c1_scaled = coef(0);
  out.c1 = coef(0) * std::pow(q_ref, 2.0);
  // report the q^{-(3+2 omega4)} coefficient; in the merged basis that is the
  // q^{-4} column
  double c2_scaled = merged ? coef(1) : coef(2);
  out.c2_scaled = c2_scaled;
  out.c2 = c2_scaled * std::pow(q_ref, tail_exp);
  return out;
}

SpectrumResult find_spectrum_general(double kappa, const Deformation& d,
                                     double omega_min, double omega_max,
                                     int max_levels, double rel_tol) {
  check_omega_window(omega_min, omega_max);
  if (!(kappa > 0.0))
    throw std::domain_error("find_spectrum_general: kappa must be > 0");
  SpectrumResult r;
  if (kappa <= 1.0 / 16.0) {
    r.method = SpectrumMethod::exact_deformed;
    r.units = SpectrumUnits::omega;
    r.window_exhausted = true;
  } else {
    r = find_levels(
        [&](double w) { return shoot_deformed(kappa, d, w).c1_scaled; },
        omega_min, omega_max, max_levels, SpectrumMethod::exact_deformed,
        rel_tol);
  }
  r.params.kappa = kappa;
  r.params.beta = d.beta;
  r.params.beta_prime = d.beta_prime;
  r.params.omega_min = omega_min;
  r.params.omega_max = omega_max;
  return r;
}

namespace {

// Existence of at least one quantization zero. For kappa < 1/16 the
// parameters are real (no oscillation) below omega_c = (1-16 kappa)/2; only
// the oscillatory region above it can hold zeros and is scanned.
bool has_bound_state(double kappa, const Deformation& d, double omega_floor) {
  bool equal_betas = std::abs(d.omega4() - 0.5) < 1e-9;
  double omega_c = 0.5 * (1.0 - 16.0 * kappa);
  double lo = std::max(omega_floor, omega_c > 0.0 ? omega_c * (1.0 + 1e-9) : omega_floor);
  double hi = 0.499;
  if (lo >= hi) return false;
  auto grid = log_grid_per_decade(lo, hi, 20);
  std::vector<double> vals(grid.size());
  if (equal_betas) {
    parallel_for(grid.size(), [&](std::size_t i) {
      vals[i] = h_scaled_impl(kappa, grid[i]);
    });
  } else {
    parallel_for(grid.size(), [&](std::size_t i) {
      vals[i] = shoot_deformed(kappa, d, grid[i]).c1_scaled;
    });
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (vals[i] == 0.0 || vals[i] * vals[i + 1] < 0.0) return true;
  return false;
}

} // namespace

double critical_coupling(const Deformation& d, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("critical_coupling: tol must be > 0");
  bool equal_betas = std::abs(d.omega4() - 0.5) < 1e-9;
  // The shooting path cannot reach omega ~ 1e-60; its resolution of kappa*
  // is correspondingly coarser.
  double omega_floor = equal_betas ? 1e-60 : 1e-8;
  double lo = 1.0 / 32.0, hi = 0.25;
  if (has_bound_state(lo, d, omega_floor))
    throw std::runtime_error("critical_coupling: lower bracket already binds");
  if (!has_bound_state(hi, d, omega_floor))
    throw std::runtime_error("critical_coupling: upper bracket does not bind");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (has_bound_state(mid, d, omega_floor) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

Complex zero_energy_wavefunction(double kappa, double omega4, double xi,
                                 Complex coef_a, Complex coef_b) {
  if (!(kappa > 1.0 / 16.0))
    throw std::domain_error("zero_energy_wavefunction: requires kappa > 1/16");
  if (xi == 0.0)
    throw std::domain_error("zero_energy_wavefunction: xi = 0 divergence");
  if (!(xi > 0.0) || !(xi < 1.0))
    throw std::domain_error("zero_energy_wavefunction: requires 0 < xi < 1");
  OmegaParams op;
  op.kappa = kappa;
  op.omega4 = omega4;
  auto p = zero_energy_bundle(op);
  double nu = std::sqrt(4.0 * kappa - 0.25);
  double lx = std::log(xi);
  Complex f1 = hyp2f1(p, xi);
  Complex f2 = hyp2f1(p.a - p.c + 1.0, p.b - p.c + 1.0, 2.0 - p.c, xi);
  Complex down = std::exp(Complex(0.0, -0.5 * nu * lx));
  return (1.0 - xi) * std::pow(xi, -1.25) *
         (coef_a * down * f1 + coef_b * std::conj(down) * f2);
}

namespace {

// Eq.-(31)-style ODE in physical momentum units (m = 1), used by the
// ordinary-QM limit check where omega1 p^2 stays tiny.
struct PhysicalRhs {
  double beta, beta_prime, kappa, energy;
  void operator()(const ode::State2& y, ode::State2& dydp, double p) const {
    double u = p * p;
    double om1 = beta + beta_prime;
    double P = 4.0 * (u - energy) / (u - 2.0 * energy) -
               (1.0 + beta_prime * u) / (1.0 + om1 * u);
    double Q = ((6.0 + (10.0 * beta + 6.0 * beta_prime) * u) / (1.0 + om1 * u) +
                4.0 * kappa / ((1.0 + om1 * u) * (1.0 + om1 * u))) /
               (u - 2.0 * energy);
    dydp[0] = y[1];
    dydp[1] = -(2.0 / p) * P * y[1] - Q * y[0];
  }
};

LimitCheck check_ordinary_limit(double kappa, const Deformation& d) {
  LimitCheck out;
  // shrink the deformation to omega1 = 2e-7 keeping omega4 fixed
  double om4 = d.omega4();
  Deformation tiny{2e-7 * om4, 2e-7 * (1.0 - om4), 0.0};
  double k = 1.0, energy = -0.5 * k * k;
  auto c = Coupling::make(kappa);
  PhysicalRhs rhs{tiny.beta, tiny.beta_prime, kappa, energy};
  double c2 = -(6.0 + 4.0 * kappa) / (6.0 * k * k);
  double p0 = 1e-3 * k;
  std::vector<double> ps = {0.5, 1.0, 2.0};
  auto states = ode::integrate_sampled(
      rhs, ode::State2{1.0 + c2 * p0 * p0, 2.0 * c2 * p0}, p0, ps, 1e-11);
  double max_err = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    double ref = wavefunction_momentum(c, k, ps[i]);
    max_err = std::max(max_err, std::abs(states[i][0] - ref) / std::abs(ref));
  }
  out.error = max_err;
  out.pass = max_err < 1e-4;
  out.detail = "deformed ODE at omega1=2e-7 vs ordinary-QM hypergeometric, p in {0.5,1,2}";
  return out;
}

// Log-derivative q psi'/psi at the end of an outward integration.
double tail_slope(double kappa, const Deformation& d, double omega,
                  double q_eval) {
  double om4 = d.omega4();
  auto fs = frobenius_start(kappa, omega, om4);
  double q0 = auto_q_min(fs.c2);
  DeformedRhs rhs{kappa, omega, om4};
  auto y = ode::integrate(rhs, frobenius_state(fs, q0), q0, q_eval, 1e-12, 1e-300);
  return q_eval * y[1] / y[0];
}

LimitCheck check_tail_exponents(double kappa, const Deformation& d) {
  LimitCheck out;
  double om4 = d.omega4();
  // slow branch q^{-2}: generic omega, C1 != 0
  double omega_generic = 0.11;
  {
    auto s = shoot_deformed(kappa, d, omega_generic);
    for (double w : {0.17, 0.23}) {
      if (std::abs(s.c1_scaled) > 0.05 * std::abs(s.c2_scaled)) break;
      omega_generic = w;
      s = shoot_deformed(kappa, d, w);
    }
    double ratio = std::abs(s.c2_scaled) /
                   std::max(std::abs(s.c1_scaled), 1e-12 * std::abs(s.c2_scaled));
    double gap = 1.0 + 2.0 * om4;
    double q_eval = std::clamp(std::pow(5000.0 * ratio, 1.0 / gap), 300.0, 2e4);
    double slope = tail_slope(kappa, d, omega_generic, q_eval);
    out.error = std::abs(slope + 2.0);
  }
  // fast branch q^{-(3+2 omega4)}: at a spectrum point, C1 = 0
  {
    auto spec = find_spectrum_general(kappa, d, 5e-3, 0.499, 1, 1e-12);
    if (spec.levels.empty()) {
      out.pass = false;
      out.detail = "no bound state found for the tail-exponent check";
      return out;
    }
    double w_root = spec.levels.front();
    auto s = shoot_deformed(kappa, d, w_root);
    double r = std::abs(s.c1) / std::max(std::abs(s.c2), 1e-300);
    double gap = 1.0 + 2.0 * om4;
    double q_eval = std::clamp(std::pow(2e-4 / std::max(r, 1e-13), 1.0 / gap),
                               50.0, 300.0);
    double slope = tail_slope(kappa, d, w_root, q_eval);
    out.error = std::max(out.error, std::abs(slope + 3.0 + 2.0 * om4));
  }
  out.pass = out.error < 1e-3;
  out.detail = "measured tail exponents vs {-2, -(3+2 omega4)}";
  return out;
}

LimitCheck check_zero_energy_limit(double kappa, const Deformation& d) {
  LimitCheck out;
  double om4 = d.omega4();
  double nu = std::sqrt(4.0 * kappa - 0.25);
  double omega_small = 1e-8;
  std::vector<double> xis = {0.2, 0.3, 0.4, 0.5, 0.6};
  std::vector<double> qs(xis.size());
  for (std::size_t i = 0; i < xis.size(); ++i)
    qs[i] = std::sqrt(xis[i] / (1.0 - xis[i]));

  auto fs = frobenius_start(kappa, omega_small, om4);
  double q0 = auto_q_min(fs.c2);
  DeformedRhs rhs{kappa, omega_small, om4};
  auto states =
      ode::integrate_sampled(rhs, frobenius_state(fs, q0), q0, qs, 1e-12, 1e-300);

  // psi = 2 Re[A w(xi)], w = (1-xi) xi^{-5/4 - i nu/2} F(a,b,c;xi);
  // solve the 2x2 real system for (Re A, Im A) at xi = 0.3, 0.5.
  OmegaParams op;
  op.kappa = kappa;
  op.omega4 = om4;
  auto params = zero_energy_bundle(op);
  auto w_of = [&](double xi) {
    return (1.0 - xi) * std::pow(xi, -1.25) *
           std::exp(Complex(0.0, -0.5 * nu * std::log(xi))) * hyp2f1(params, xi);
  };
  Complex w1 = w_of(xis[1]), w2 = w_of(xis[3]);
  Eigen::Matrix2d M;
  M << 2.0 * w1.real(), -2.0 * w1.imag(), 2.0 * w2.real(), -2.0 * w2.imag();
  Eigen::Vector2d rhs_fit(states[1][0], states[3][0]);
  Eigen::Vector2d a_fit = M.colPivHouseholderQr().solve(rhs_fit);
  Complex A(a_fit(0), a_fit(1));

  double max_err = 0.0;
  for (std::size_t i : {std::size_t(0), std::size_t(2), std::size_t(4)}) {
    Complex model = zero_energy_wavefunction(kappa, om4, xis[i], A, std::conj(A));
    double ref = states[i][0];
    max_err = std::max(max_err, std::abs(model.real() - ref) / std::abs(ref));
  }
  out.error = max_err;
  out.pass = max_err < 1e-4;
  out.detail = "full solution at omega=1e-8 vs zero-energy solution, xi in {0.2,0.4,0.6}";
  return out;
}

} // namespace

LimitReport validate_limits(double kappa, const Deformation& d) {
  if (!(kappa > 1.0 / 16.0))
    throw std::domain_error("validate_limits: requires kappa > 1/16");
  if (d.beta + d.beta_prime <= 0.0)
    throw std::domain_error("validate_limits: beta + beta' must be > 0");
  LimitReport report;
  report.ordinary_limit = check_ordinary_limit(kappa, d);
  report.tail_exponents = check_tail_exponents(kappa, d);
  report.zero_energy_limit = check_zero_energy_limit(kappa, d);
  return report;
}

} // namespace minlen
