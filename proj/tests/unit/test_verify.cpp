#include <doctest.h>

#include <cmath>
#include <limits>

#include "spinor_disc/errors.hpp"
#include "spinor_disc/spectrum.hpp"
#include "spinor_disc/verify.hpp"

using namespace spinor_disc;
using namespace spinor_disc::verify;
using spectrum::solve_coefficients;
using spectrum::terminating_mode;

namespace {

std::vector<double> grid_within(double reach, int points) {
  std::vector<double> g;
  for (int i = 0; i < points; ++i) g.push_back(-reach + 2 * reach * i / (points - 1));
  return g;
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

}  // namespace

TEST_CASE("residual budgets and steps") {
  CHECK(residual_budget(0.0) == 1e-8);
  CHECK(residual_budget(-0.9) == 1e-8);
  CHECK(residual_budget(0.95) == 1e-6);
  CHECK(residual_budget(-0.99) == 1e-6);
  CHECK(residual_budget(0.995) == std::numeric_limits<double>::infinity());
  CHECK(first_derivative_step(0.0) == 1e-3);
  CHECK(first_derivative_step(0.999999) == 1e-5);
  CHECK(second_derivative_step(0.5) > first_derivative_step(0.5));
}

TEST_CASE("first-order residual") {
  const auto g = grid_within(0.99, 199);
  const auto r = first_order_residual(solve_coefficients({0.0, 0, 2}), g);
  CHECK(r.max_norm < 1e-8);
  CHECK(r.max_norm == max_of(r.residual));
  CHECK(r.pass());
  CHECK(r.tag == "first_order");

  for (double e : {0.0, 0.1, 0.25, 0.4, 0.49})
    for (int l0 = 0; l0 <= 5; ++l0) CHECK(first_order_residual(solve_coefficients({e, 0, l0}), g).pass());
  for (int n = 1; n <= 2; ++n)
    for (int l0 = n; l0 <= 5; ++l0) CHECK(first_order_residual(solve_coefficients({0.0, n, l0}), g).pass());

  // The massless mode: b = 0 and mu = 0 leave only L2 A = 0.
  const auto m = first_order_residual(solve_coefficients({0.3, 0, 0}), g);
  CHECK(m.max_norm < 1e-10);

  CHECK_THROWS_AS(first_order_residual(solve_coefficients({0.0, 0, 2}), {-1.0, 0.0}), BoundaryError);
  CHECK_THROWS_AS(first_order_residual(solve_coefficients({0.0, 0, 2}), {0.0, 1.0}), BoundaryError);
}

TEST_CASE("first-order residual exposes the terminating n >= 1, eps > 0 functions") {
  CHECK_THROWS_AS(solve_coefficients({0.49, 2, 4}), InconsistentRecursionError);
  const auto r = first_order_residual(terminating_mode({0.49, 2, 4}), grid_within(0.99, 99));
  CHECK_FALSE(r.pass());
}

TEST_CASE("second-order residuals") {
  const auto g = grid_within(0.99, 199);
  CHECK(second_order_residual(solve_coefficients({0.0, 0, 3}), Component::A, g).max_norm < 1e-8);
  CHECK(second_order_residual(solve_coefficients({0.25, 0, 2}), Component::A, g).max_norm < 1e-7);
  CHECK(second_order_residual(solve_coefficients({0.25, 0, 2}), Component::B, g).max_norm < 1e-6);
  for (double e : {0.0, 0.1, 0.25, 0.4, 0.49})
    for (int l0 = 1; l0 <= 5; ++l0) {
      const auto s = solve_coefficients({e, 0, l0});
      CHECK(second_order_residual(s, Component::A, g).pass());
      CHECK(second_order_residual(s, Component::B, g).pass());
    }
  for (int n = 1; n <= 2; ++n)
    for (int l0 = n; l0 <= 5; ++l0) {
      const auto s = solve_coefficients({0.0, n, l0});
      CHECK(second_order_residual(s, Component::A, g).pass());
      CHECK(second_order_residual(s, Component::B, g).pass());
    }
  // The n = 1 terminating function is not a solution of the A equation.
  CHECK_FALSE(second_order_residual(terminating_mode({0.25, 1, 2}), Component::A, g).pass());
  CHECK_THROWS_AS(second_order_residual(solve_coefficients({0.25, 0, 0}), Component::B, g), DomainError);
}

TEST_CASE("finite-volume eigenvalues") {
  const auto a = fd_eigenvalues(0.0, 0, 4);
  REQUIRE(a.size() == 4);
  CHECK(std::abs(a[0]) < 1e-6);
  CHECK(a[1] == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(a[2] == doctest::Approx(6.0).epsilon(1e-4));
  CHECK(a[3] == doctest::Approx(12.0).epsilon(1e-4));

  const auto b = fd_eigenvalues(0.25, 0, 3);
  CHECK(std::abs(b[0]) < 1e-6);
  CHECK(b[1] == doctest::Approx(1.5).epsilon(1e-4));
  CHECK(b[2] == doctest::Approx(5.0).epsilon(1e-4));

  // For n >= 1 the normalisable branch behaves like (1+x)^{n/2+eps} at the
  // far end; its lowest value is (n+1)(n+2 eps) = 8.4 here, not 2(3-0.8).
  const auto c = fd_eigenvalues(0.4, 2, 2);
  CHECK(c[0] == doctest::Approx(8.4).epsilon(1e-4));
  CHECK(c[1] == doctest::Approx(4 * 3.8).epsilon(1e-4));

  // eps = 0 reduces to the Legendre spectrum starting at l = n.
  const auto d = fd_eigenvalues(0.0, 2, 3);
  CHECK(d[0] == doctest::Approx(6.0).epsilon(1e-4));
  CHECK(d[2] == doctest::Approx(20.0).epsilon(1e-4));

  CHECK_THROWS_AS(fd_eigenvalues(0.5, 0, 2), DomainError);
  CHECK_THROWS_AS(fd_eigenvalues(0.1, 0, 0), DomainError);
  // Too coarse to be stable under doubling.
  CHECK_THROWS_AS(fd_eigenvalues(0.1, 0, 12, 16), AccuracyError);
}

TEST_CASE("recurrences of the projected coefficients") {
  const auto t = projection_recurrence_check(solve_coefficients({0.0, 0, 2}), 22);
  for (std::size_t i = 0; i < t.alpha.size(); ++i) CHECK(std::abs(t.alpha[i] - (i == 2 ? 1.0 : 0.0)) < 1e-12);
  CHECK(t.alpha_max < 1e-10);
  CHECK(t.beta_max < 1e-10);

  const auto s = solve_coefficients({0.25, 0, 2});
  const auto r = projection_recurrence_check(s, 30);
  CHECK(r.alpha_max < 1e-6);
  CHECK(r.beta_max < 1e-6);
  CHECK(r.alpha_residual.size() == 30u);
  CHECK(r.beta_residual.size() == 29u);
  // The tail of A does not terminate.
  CHECK(std::abs(r.alpha.back()) > 1e-8);

  for (double e : {0.1, 0.4, 0.49})
    for (int l0 = 1; l0 <= 4; ++l0) {
      const auto q = projection_recurrence_check(solve_coefficients({e, 0, l0}), l0 + 24);
      CHECK(q.alpha_max < 1e-6);
      CHECK(q.beta_max < 1e-6);
    }
  CHECK_THROWS_AS(projection_recurrence_check(s, 21), DomainError);
}

TEST_CASE("rho-form residual") {
  const geometry::DiscGeometry g(1.0);
  std::vector<double> rho;
  for (int i = 0; i <= 60; ++i) rho.push_back(0.1 * std::pow(100.0, i / 60.0));
  CHECK(rho_residual(solve_coefficients({0.0, 0, 1}), rho, g).max_norm < 1e-7);
  for (double e : {0.1, 0.25, 0.49}) CHECK(rho_residual(solve_coefficients({e, 0, 2}), rho, g).max_norm < 1e-7);

  // rho = 2 rho0 is x = 0; both forms see a residual at the round-off level there.
  const auto s = solve_coefficients({0.25, 0, 3});
  const auto at_two = rho_residual(s, {2.0}, g);
  const auto at_zero = first_order_residual(s, {0.0});
  CHECK(at_two.x[0] == 0.0);
  CHECK(at_two.max_norm < 1e-9);
  CHECK(at_zero.max_norm < 1e-9);

  // The massless A is a constant times f^eps as a function of rho.
  const auto m = solve_coefficients({0.3, 0, 0});
  for (double r : rho)
    CHECK(spectrum::radial_a(m, g.rho_to_x(r)) * std::pow(2.0, 0.3) ==
          doctest::Approx(std::pow(g.conformal_factor(r), 0.3)).epsilon(1e-13));
  CHECK(rho_residual(m, rho, g).max_norm < 1e-10);
  CHECK_THROWS_AS(rho_residual(m, {0.0}, g), BoundaryError);
}
