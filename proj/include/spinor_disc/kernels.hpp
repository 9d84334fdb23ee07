#pragma once

#include <utility>
#include <vector>

#include "spinor_disc/spectrum.hpp"

// Grid kernels used by the cli. Each has a plain serial loop and an OpenMP
// version; both evaluate every cell with identical arithmetic, so their
// outputs agree bit for bit.
namespace spinor_disc::kernels {

enum class Execution { Serial, Parallel };

spectrum::RadialProfiles sample_mode(const spectrum::ModeSolution& s, const std::vector<double>& grid, Execution ex);

enum class Quantity { A, B };

/// values[ie * x.size() + ix] holds A or b of the terminating mode (n, l0) at (eps[ie], x[ix]),
/// gauge a^{l0} = 1.
struct Surface {
  int n = 0;
  int l0 = 0;
  Quantity quantity = Quantity::A;
  std::vector<double> x;
  std::vector<double> eps;
  std::vector<double> values;
  std::vector<double> consistency_residual;  // one per eps
  double at(std::size_t ie, std::size_t ix) const { return values[ie * x.size() + ix]; }
};

Surface figure_surface(int n, int l0, Quantity q, const std::vector<double>& x, const std::vector<double>& eps,
                       Execution ex);

struct FdCase {
  double epsilon;
  int n;
};

/// fd_eigenvalues for every case; result[i] belongs to cases[i].
std::vector<std::vector<double>> fd_sweep(const std::vector<FdCase>& cases, int count, int points, Execution ex);

/// Number of OpenMP threads the parallel kernels would use.
int max_threads();

}  // namespace spinor_disc::kernels
