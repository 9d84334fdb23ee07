#include "spinor_disc/kernels.hpp"

#include <omp.h>

#include <exception>

#include "spinor_disc/verify.hpp"

namespace spinor_disc::kernels {

namespace {

// Runs body(i) for i in [0, count). Exceptions thrown inside the OpenMP region
// are captured and the one with the lowest index is rethrown afterwards.
template <class Body>
void for_each_index(long count, Execution ex, Body body) {
  if (ex == Execution::Serial) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  long error_index = count;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(spinor_disc_kernel_error)
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

spectrum::RadialProfiles sample_mode(const spectrum::ModeSolution& s, const std::vector<double>& grid, Execution ex) {
  spectrum::RadialProfiles out;
  out.x = grid;
  out.a.assign(grid.size(), 0.0);
  out.b.assign(grid.size(), 0.0);
  const bool has_b = s.params.l0 > 0;
  for_each_index(static_cast<long>(grid.size()), ex, [&](long i) {
    out.a[i] = spectrum::radial_a(s, grid[i]);
    if (has_b) out.b[i] = spectrum::radial_b(s, grid[i]);
  });
  return out;
}

Surface figure_surface(int n, int l0, Quantity q, const std::vector<double>& x, const std::vector<double>& eps,
                       Execution ex) {
  Surface s;
  s.n = n;
  s.l0 = l0;
  s.quantity = q;
  s.x = x;
  s.eps = eps;
  s.values.assign(x.size() * eps.size(), 0.0);
  s.consistency_residual.assign(eps.size(), 0.0);

  std::vector<spectrum::ModeSolution> modes(eps.size());
  for_each_index(static_cast<long>(eps.size()), ex, [&](long j) {
    modes[j] = spectrum::terminating_mode({eps[j], n, l0});
    s.consistency_residual[j] = modes[j].consistency_residual;
  });
  const long nx = static_cast<long>(x.size());
  for_each_index(nx * static_cast<long>(eps.size()), ex, [&](long k) {
    const auto& m = modes[k / nx];
    const double xv = x[k % nx];
    s.values[k] = q == Quantity::A ? spectrum::radial_a(m, xv) : spectrum::radial_b(m, xv);
  });
  return s;
}

std::vector<std::vector<double>> fd_sweep(const std::vector<FdCase>& cases, int count, int points, Execution ex) {
  std::vector<std::vector<double>> out(cases.size());
  for_each_index(static_cast<long>(cases.size()), ex, [&](long i) {
    out[i] = verify::fd_eigenvalues(cases[i].epsilon, cases[i].n, count, points);
  });
  return out;
}

}  // namespace spinor_disc::kernels
