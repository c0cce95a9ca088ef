#ifndef MINLEN_SPECTRUM_HPP
#define MINLEN_SPECTRUM_HPP

#include <cmath>
#include <vector>

namespace minlen {

enum class SpectrumMethod {
  orthogonality,
  cutoff,
  exact_deformed,
  asymptotic_deformed,
  oracle,
};

enum class SpectrumUnits { energy, omega };

const char* to_string(SpectrumMethod m);

/// Snapshot of the inputs a spectrum was computed from. NaN = not supplied.
struct SpectrumParams {
  double kappa = NAN;
  double beta = NAN;
  double beta_prime = NAN;
  double mass = NAN;
  double e1 = NAN;
  double lambda_cut = NAN;
  double f_valid = NAN;
  double omega_min = NAN;
  double omega_max = NAN;
};

/// Bound-state levels ordered by quantum number, ground state first. In
/// energy units that is ascending E_n < 0 (deepest first); in omega units
/// descending omega_n > 0. Residuals hold the quantization-function value at
/// each accepted root (zero for closed-form spectra).
struct SpectrumResult {
  SpectrumMethod method = SpectrumMethod::orthogonality;
  SpectrumUnits units = SpectrumUnits::energy;
  std::vector<double> levels;
  std::vector<double> residuals;
  SpectrumParams params;
  bool window_exhausted = false;
};

} // namespace minlen

#endif
