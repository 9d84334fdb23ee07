#pragma once

#include <string>
#include <vector>

#include "spinor_disc/geometry.hpp"
#include "spinor_disc/spectrum.hpp"

namespace spinor_disc::verify {

using spectrum::ModeParams;
using spectrum::ModeSolution;

/// Residual budget at x: 1e-8 for |x| <= 0.9, 1e-6 up to |x| <= 0.99.
/// Points with |x| > 0.99 are reported but carry no budget (infinity).
double residual_budget(double x);

/// Step of the 5-point first-derivative stencil: max(1e-5, 1e-3 (1 - |x|)).
double first_derivative_step(double x);
/// Step of the 7-point sixth-order stencils used by the second-order residuals:
/// max(1e-4, 1e-2 (1 - |x|)).
double second_derivative_step(double x);

struct ResidualReport {
  std::string tag;
  ModeParams params;
  std::vector<double> x;
  std::vector<double> residual;  // scaled by `scale`
  std::vector<double> budget;
  double scale = 1.0;            // max(1, peak |A| + |b| on the grid)
  double max_norm = 0.0;
  /// max over the grid of residual / budget; <= 1 means every point is within budget.
  double worst_ratio = 0.0;
  bool pass() const { return worst_ratio <= 1.0; }
};

/// Both lines of the first-order system with B = i b:
///   L1 b + mu A = 0,  mu b - L2 A = 0,
///   L2 = -sqrt(1-x^2)(d/dx + n/(1-x^2)) - eps sqrt((1-x)/(1+x)),
///   L1 = -sqrt(1-x^2)(d/dx - (n+1)/(1-x^2)) - (1-eps) sqrt((1-x)/(1+x)).
/// The reported residual is the larger of the two lines.
ResidualReport first_order_residual(const ModeSolution& s, const std::vector<double>& grid);

enum class Component { A, B };

/// Second-order equation for A (Component::A) or for b (Component::B).
ResidualReport second_order_residual(const ModeSolution& s, Component which, const std::vector<double>& grid);

/// First-order system rewritten in the disc radius rho (rho0 from the geometry).
ResidualReport rho_residual(const ModeSolution& s, const std::vector<double>& rho_grid,
                            const geometry::DiscGeometry& g = geometry::DiscGeometry{});

/// Lowest `count` eigenvalues (m rho0)^2 of the A equation for given (eps, n), from a
/// finite-volume discretisation of the Sturm-Liouville form obtained with A = (1+x)^{-eps} u.
/// The grid is x = cos(theta) with `points` cells; the result on 2*points cells is
/// returned and compared with the coarse one (shift > 1e-3 relative throws AccuracyError).
std::vector<double> fd_eigenvalues(double epsilon, int n, int count, int points = 2000);

/// One solve at a fixed resolution (no doubling check).
std::vector<double> fd_eigenvalues_at(double epsilon, int n, int count, int points);

struct ProjectedCoefficients {
  ModeParams params;
  int l_max = 0;
  std::vector<double> alpha;  // alpha^l_n, l = n ... l_max
  std::vector<double> beta;   // beta^l_{n+1}, l = n+1 ... l_max (empty for l0 = 0)
  std::vector<double> alpha_residual;  // per relation degree l = n ... l_max-1
  std::vector<double> beta_residual;   // per relation degree l = n+1 ... l_max-1
  double alpha_max = 0.0;
  double beta_max = 0.0;
};

/// Projects A onto P^l_n and b onto P^l_{n+1} and evaluates both three-term relations.
/// Residuals are divided by sum |coeff| times the largest bracket of each relation.
/// Requires l_max >= l0 + 20.
ProjectedCoefficients projection_recurrence_check(const ModeSolution& s, int l_max);

}  // namespace spinor_disc::verify
