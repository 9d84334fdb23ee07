#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spinor_disc/errors.hpp"
#include "spinor_disc/geometry.hpp"

using namespace spinor_disc;
using namespace spinor_disc::geometry;

TEST_CASE("conformal factor at the origin and at rho = 2 rho0") {
  DiscGeometry g(1.0);
  CHECK(g.conformal_factor(0.0) == 1.0);
  CHECK(g.conformal_factor(2.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(g.conformal_factor(2.0) - 2.0 / (1.0 + g.rho_to_x(2.0))) < 1e-15);
  CHECK_THROWS_AS(g.conformal_factor(-0.1), DomainError);
}

TEST_CASE("f (1 + x) = 2 over many decades") {
  for (double r0 : {0.3, 1.0, 7.0}) {
    DiscGeometry g(r0);
    for (double rho = 1e-6 * r0; rho < 1e6 * r0; rho *= 1.7) {
      // 1 + x carries the absolute rounding of x, which f then amplifies.
      const double f = g.conformal_factor(rho);
      const double prod = f * (1.0 + g.rho_to_x(rho));
      CHECK(std::abs(prod - 2.0) < 4e-16 * std::max(1.0, f) * 4);
    }
  }
}

TEST_CASE("rho <-> x maps") {
  DiscGeometry g(1.0);
  CHECK(g.rho_to_x(0.0) == 1.0);
  CHECK(std::abs(g.rho_to_x(2.0)) < 1e-16);
  CHECK(g.x_to_rho(0.5) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(g.x_to_rho(-1.0), InfiniteRadiusError);
  CHECK_THROWS_AS(g.x_to_rho(-1.5), BoundaryError);
  CHECK_THROWS_AS(g.x_to_rho(1.0 + 1e-9), DomainError);

  DiscGeometry h(2.5);
  double prev = 2.0;
  for (double rho = 1e-6 * 2.5; rho < 1e6 * 2.5; rho *= 1.3) {
    const double x = h.rho_to_x(rho);
    CHECK(x < prev);
    prev = x;
    // The rounding of x is amplified by 1/(1-x) near the centre and 1/(1+x) far out.
    const double cond = 1.0 / (1.0 - x) + 1.0 / (1.0 + x);
    CHECK(std::abs(h.x_to_rho(x) - rho) <= 4e-16 * rho * cond);
  }
}

TEST_CASE("dx/drho agrees with a centred difference") {
  DiscGeometry g(1.3);
  for (double rho : {0.1, 1.0, 2.6, 9.0}) {
    const double h = 1e-5 * rho;
    const double fd = (g.rho_to_x(rho + h) - g.rho_to_x(rho - h)) / (2 * h);
    CHECK(g.dx_drho(rho) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("volume is pi (2 rho0)^2") {
  for (double r0 : {0.5, 1.0, 3.0}) CHECK(DiscGeometry(r0).volume() == std::numbers::pi * (2 * r0) * (2 * r0));
  CHECK_THROWS_AS(DiscGeometry(0.0), DomainError);
}

TEST_CASE("epsilon and F parametrisation") {
  for (double e : {0.0, 0.1, 0.25, 0.4, 0.49, 0.375}) {
    const auto p = SpinConnectionParam::from_epsilon(e);
    CHECK(p.F() == 0.5 - e);
    CHECK(SpinConnectionParam::from_F(p.F()).epsilon() == doctest::Approx(e).epsilon(1e-16));
  }
  // Exact whenever 1/2 - eps is representable.
  for (double e : {0.0, 0.25, 0.375, 0.4375}) CHECK(SpinConnectionParam::from_F(0.5 - e).epsilon() == e);
  CHECK_THROWS_AS(SpinConnectionParam::from_epsilon(0.5), DomainError);
  CHECK_THROWS_AS(SpinConnectionParam::from_epsilon(-0.01), DomainError);
  CHECK_THROWS_AS(SpinConnectionParam::from_F(0.0), DomainError);
}

TEST_CASE("spin connection") {
  DiscGeometry g(1.0);
  const auto half = SpinConnectionParam::from_F(0.5);

  SUBCASE("vanishes at the origin") {
    const auto w = spin_connection(g, half, 0.0, 0.7);
    for (int s : {5, 6})
      for (int t : {5, 6})
        for (int sp : {5, 6}) CHECK(std::abs(w(s, t, sp)) == 0.0);
  }

  SUBCASE("magnitude at rho = 2 rho0 includes the inverse zweibein") {
    // F f (-x^s'/f) / rho0^2 with f = 2, x^5 = 2: magnitude F * 2 = 1 / rho0.
    for (double r0 : {1.0, 2.0}) {
      DiscGeometry h(r0);
      const auto w = spin_connection(h, half, 2.0 * r0, 0.0);
      CHECK(std::abs(w(5, 6, 5)) == doctest::Approx(1.0 / r0).epsilon(1e-15));
      CHECK(std::abs(w(5, 6, 6)) < 1e-15);
    }
  }

  SUBCASE("antisymmetric, linear in F and odd under reflection") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> rho(0.0, 10.0), phi(0.0, 2 * std::numbers::pi), F(0.01, 0.5);
    for (int trial = 0; trial < 50; ++trial) {
      const double r = rho(rng), ph = phi(rng), f1 = F(rng);
      const auto p1 = SpinConnectionParam::from_F(f1);
      const auto p2 = SpinConnectionParam::from_F(0.5);
      const auto a = spin_connection(g, p1, r, ph);
      const auto b = spin_connection(g, p2, r, ph);
      const auto c = spin_connection(g, p1, r, ph + std::numbers::pi);
      for (int sp : {5, 6}) {
        CHECK(std::abs(a(5, 6, sp) + a(6, 5, sp)) < 1e-15);
        CHECK(std::abs(a(5, 5, sp)) == 0.0);
        CHECK(std::abs(a(5, 6, sp) * 0.5 - b(5, 6, sp) * p1.F()) < 1e-12);
        CHECK(std::abs(a(5, 6, sp) + c(5, 6, sp)) < 1e-12);
      }
    }
  }
}
