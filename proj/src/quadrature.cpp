#include "spinor_disc/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "spinor_disc/errors.hpp"

namespace spinor_disc::quadrature {

double Rule::integrate(const std::function<double(double)>& g) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * g(nodes[i]);
  return sum;
}

Rule gauss_jacobi(int m, double alpha, double beta) {
  if (m < 1) throw DomainError("quadrature needs at least one node");
  if (!(alpha > -1.0 && beta > -1.0)) throw DomainError("Jacobi exponents must exceed -1");

  // Three-term recurrence of the monic Jacobi polynomials.
  const double ab = alpha + beta;
  Eigen::VectorXd diag(m);
  Eigen::VectorXd sub(std::max(m - 1, 1));
  for (int k = 0; k < m; ++k) {
    const double s = 2.0 * k + ab;
    if (k == 0) {
      diag(k) = (beta - alpha) / (ab + 2.0);
    } else {
      diag(k) = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
  }
  for (int k = 1; k < m; ++k) {
    const double s = 2.0 * k + ab;
    if (k == 1) {
      // (k + ab) / (s - 1) cancels; keeps alpha + beta = -1 finite.
      sub(0) = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
      continue;
    }
    const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
    const double den = s * s * (s + 1.0) * (s - 1.0);
    sub(k - 1) = std::sqrt(num / den);
  }

  Rule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.nodes.resize(m);
  rule.weights.resize(m);

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
  if (m == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mu0;
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(m - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw AccuracyError("Golub-Welsch eigensolve failed");
  for (int i = 0; i < m; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[i] = solver.eigenvalues()(i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

Rule gauss_legendre(int m) { return gauss_jacobi(m, 0.0, 0.0); }

}  // namespace spinor_disc::quadrature
