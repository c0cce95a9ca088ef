#include "minlen/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace minlen {

// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi
// matrix, weights 2*(first eigenvector component)^2.
GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: order must be >= 1");
  if (n == 1) return {{0.0}, {2.0}};
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = k / std::sqrt(4.0 * k * k - 1.0);
    J(k - 1, k) = b;
    J(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    double v = es.eigenvectors()(0, i);
    rule.weights[i] = 2.0 * v * v;
  }
  return rule;
}

} // namespace minlen
