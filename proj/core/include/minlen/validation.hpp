// Cross-method consistency battery: the limit checks, oracle-vs-solver
// agreement, orthogonality quadrature, the cutoff <-> minimal-length
// identification and the critical coupling. Backs the `validate` CLI command
// and the acceptance suite.
#ifndef MINLEN_VALIDATION_HPP
#define MINLEN_VALIDATION_HPP

#include <string>
#include <vector>

#include "minlen/deformed_model.hpp"

namespace minlen {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;  // the quantity compared against the threshold
  double threshold = 0.0;
  std::string detail;
};

struct ValidationOptions {
  double kappa = 0.75;
  Deformation deformation{1e-4, 1e-4, 0.0};
  /// Nystrom grid density for the oracle check.
  int oracle_points_per_decade = 64;
  bool run_oracle = true;
};

std::vector<CheckResult> run_validation(const ValidationOptions& opts);

} // namespace minlen

#endif
