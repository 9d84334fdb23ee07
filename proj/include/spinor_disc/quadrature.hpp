#pragma once

#include <functional>
#include <vector>

namespace spinor_disc::quadrature {

/// Gauss rule on [-1, 1] for the weight (1 - x)^alpha (1 + x)^beta.
/// Nodes are ascending.
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double alpha = 0.0;
  double beta = 0.0;

  std::size_t size() const noexcept { return nodes.size(); }

  /// sum_i w_i g(x_i), i.e. the integral of weight * g.
  double integrate(const std::function<double(double)>& g) const;
};

/// Golub-Welsch construction; exact for weight * polynomial of degree 2m - 1.
Rule gauss_jacobi(int m, double alpha, double beta);
Rule gauss_legendre(int m);

}  // namespace spinor_disc::quadrature
