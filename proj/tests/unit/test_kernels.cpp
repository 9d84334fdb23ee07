#include <doctest.h>

#include <cstring>

#include "spinor_disc/kernels.hpp"
#include "spinor_disc/spectrum.hpp"

using namespace spinor_disc;
using namespace spinor_disc::kernels;

namespace {

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("sample_mode: serial and parallel agree bitwise") {
  const auto grid = spectrum::clamped_grid(1001, 1e-10);
  for (double e : {0.0, 0.25, 0.49}) {
    const auto s = spectrum::solve_coefficients({e, 0, 4});
    const auto a = sample_mode(s, grid, Execution::Serial);
    const auto b = sample_mode(s, grid, Execution::Parallel);
    CHECK(same_bits(a.x, b.x));
    CHECK(same_bits(a.a, b.a));
    CHECK(same_bits(a.b, b.b));
    const auto ref = spectrum::sample_profiles(s, grid);
    CHECK(same_bits(a.a, ref.a));
  }
}

TEST_CASE("figure_surface: serial and parallel agree bitwise") {
  const auto x = spectrum::clamped_grid(200, 1e-10);
  const std::vector<double> eps{0.0, 0.1, 0.2, 0.3, 0.4, 0.49};
  for (auto q : {Quantity::A, Quantity::B}) {
    const auto s = figure_surface(1, 2, q, x, eps, Execution::Serial);
    const auto p = figure_surface(1, 2, q, x, eps, Execution::Parallel);
    CHECK(same_bits(s.values, p.values));
    CHECK(same_bits(s.consistency_residual, p.consistency_residual));
    REQUIRE(s.values.size() == x.size() * eps.size());
  }
  const auto s = figure_surface(0, 2, Quantity::A, x, eps, Execution::Serial);
  const auto m = spectrum::solve_coefficients({0.3, 0, 2});
  CHECK(s.at(3, 17) == spectrum::radial_a(m, x[17]));
}

TEST_CASE("fd_sweep: serial and parallel agree bitwise") {
  const std::vector<FdCase> cases{{0.0, 0}, {0.25, 0}, {0.4, 1}};
  const auto s = fd_sweep(cases, 3, 400, Execution::Serial);
  const auto p = fd_sweep(cases, 3, 400, Execution::Parallel);
  REQUIRE(s.size() == 3);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(same_bits(s[i], p[i]));
  CHECK(max_threads() >= 1);
}

TEST_CASE("kernel errors surface from the parallel path") {
  const auto s = spectrum::solve_coefficients({0.2, 0, 2});
  CHECK_THROWS(sample_mode(s, {0.0, -1.0, 0.5}, Execution::Parallel));
}
