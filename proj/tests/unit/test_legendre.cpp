#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "spinor_disc/errors.hpp"
#include "spinor_disc/legendre.hpp"
#include "spinor_disc/quadrature.hpp"

using namespace spinor_disc;
using namespace spinor_disc::legendre;

TEST_CASE("closed forms and the Condon-Shortley sign") {
  CHECK(legendre_p(2, 0, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(legendre_p(1, 1, 0.0) == -1.0);
  for (double x : {-0.9, -0.3, 0.0, 0.4, 0.8}) {
    const double s = std::sqrt(1 - x * x);
    CHECK(legendre_p(3, 0, x) == doctest::Approx(0.5 * (5 * x * x * x - 3 * x)).epsilon(1e-14));
    CHECK(legendre_p(2, 1, x) == doctest::Approx(-3 * x * s).epsilon(1e-14));
    CHECK(legendre_p(2, 2, x) == doctest::Approx(3 * (1 - x * x)).epsilon(1e-14));
    CHECK(legendre_p(3, 2, x) == doctest::Approx(15 * x * (1 - x * x)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(legendre_p(1, 2, 0.0), DomainError);
  CHECK_THROWS_AS(legendre_p(2, -1, 0.0), DomainError);
  CHECK_THROWS_AS(legendre_p(2, 0, 1.5), DomainError);
}

TEST_CASE("parity P^l_n(-x) = (-1)^(l+n) P^l_n(x)") {
  for (int l = 0; l <= 12; ++l)
    for (int n = 0; n <= l; ++n)
      for (double x : {0.1, 0.55, 0.93}) {
        const double sign = (l + n) % 2 == 0 ? 1.0 : -1.0;
        CHECK(legendre_p(l, n, -x) == doctest::Approx(sign * legendre_p(l, n, x)).epsilon(1e-13));
      }
}

TEST_CASE("values are finite on the closed interval") {
  for (int l = 0; l <= 20; ++l)
    for (int n = 0; n <= l; ++n)
      for (double x : {-1.0, 1.0, 0.0}) CHECK(std::isfinite(legendre_p(l, n, x)));
}

TEST_CASE("Legendre ODE by finite differences") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> dist(-0.95, 0.95);
  for (int n : {0, 1, 3}) {
    const int l = 4;
    for (int i = 0; i < 100; ++i) {
      const double x = dist(rng);
      const double h = 1e-2 * (1 - std::abs(x));
      auto f = [&](double y) { return legendre_p(l, n, y); };
      const double d2 = (2 * f(x - 3 * h) - 27 * f(x - 2 * h) + 270 * f(x - h) - 490 * f(x) + 270 * f(x + h) -
                         27 * f(x + 2 * h) + 2 * f(x + 3 * h)) /
                        (180 * h * h);
      const double d1 =
          (-f(x - 3 * h) + 9 * f(x - 2 * h) - 45 * f(x - h) + 45 * f(x + h) - 9 * f(x + 2 * h) + f(x + 3 * h)) / (60 * h);
      const double res = (1 - x * x) * d2 - 2 * x * d1 + (l * (l + 1.0) - n * n / (1 - x * x)) * f(x);
      CHECK(std::abs(res) < 1e-7 * std::max(1.0, std::abs(f(x))));
    }
  }
}

TEST_CASE("derivative against a centred difference and endpoint limits") {
  for (int l = 1; l <= 8; ++l)
    for (int n = 0; n <= l; ++n)
      for (double x : {-0.7, 0.2, 0.6}) {
        const double h = 1e-6;
        const double fd = (legendre_p(l, n, x + h) - legendre_p(l, n, x - h)) / (2 * h);
        CHECK(legendre_dp(l, n, x) == doctest::Approx(fd).epsilon(1e-7).scale(1.0));
      }
  for (int l = 0; l <= 7; ++l) {
    CHECK(legendre_dp(l, 0, 1.0) == doctest::Approx(0.5 * l * (l + 1)));
    CHECK(legendre_dp(l, 0, -1.0) == doctest::Approx((l % 2 ? 1.0 : -1.0) * 0.5 * l * (l + 1)));
  }
  for (int l = 2; l <= 6; ++l) {
    const double h = 1e-7;
    const double fd_top = (legendre_p(l, 2, 1.0) - legendre_p(l, 2, 1.0 - h)) / h;
    const double fd_bot = (legendre_p(l, 2, -1.0 + h) - legendre_p(l, 2, -1.0)) / h;
    CHECK(legendre_dp(l, 2, 1.0) == doctest::Approx(fd_top).epsilon(1e-5));
    CHECK(legendre_dp(l, 2, -1.0) == doctest::Approx(fd_bot).epsilon(1e-5));
  }
  CHECK_THROWS_AS(legendre_dp(3, 1, 1.0), BoundaryError);
  CHECK(legendre_dp(5, 3, -1.0) == 0.0);
}

TEST_CASE("norm integral") {
  CHECK(norm_integral(2, 0) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(norm_integral(2, 1) == doctest::Approx(2.4).epsilon(1e-15));
  CHECK_THROWS_AS(norm_integral(1, 2), DomainError);
}

TEST_CASE("orthogonality against Gauss-Legendre for l, l' <= 20") {
  const auto rule = quadrature::gauss_legendre(40);
  for (int n = 0; n <= 20; n += 3)
    for (int l = n; l <= 20; ++l)
      for (int lp = n; lp <= 20; ++lp) {
        double q = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i)
          q += rule.weights[i] * legendre_p(l, n, rule.nodes[i]) * legendre_p(lp, n, rule.nodes[i]);
        const double expect = l == lp ? norm_integral(l, n) : 0.0;
        CHECK(std::abs(q - expect) <= 1e-10 * norm_integral(std::max(l, lp), n));
      }
}

TEST_CASE("every tabulated identity holds for 2 <= l <= 15") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dist(-0.999, 0.999);
  for (Identity id : kAllIdentities) {
    double worst = 0.0;
    for (int l = 2; l <= 15; ++l)
      for (int n = identity_min_order(id); n <= l; ++n)
        for (int i = 0; i < 50; ++i) worst = std::max(worst, verify_identity(id, l, n, dist(rng)));
    INFO(identity_tag(id));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("identity examples and tags") {
  CHECK(verify_identity(Identity::XRecurrence, 3, 1, 0.3) < 1e-12);
  CHECK(verify_identity(Identity::DerivativeRelation, 2, 0, 0.0) == 0.0);
  CHECK(verify_identity(Identity::InverseSqrtUp, 2, 1, 0.7) < 1e-12);
  for (Identity id : kAllIdentities) CHECK(parse_identity(identity_tag(id)) == id);
  CHECK_THROWS_AS(parse_identity("eq:unknown"), UsageError);
  CHECK_THROWS_AS(verify_identity(Identity::SqrtLadderLower, 3, 1, 0.2), DomainError);
  CHECK_THROWS_AS(verify_identity(Identity::XRecurrence, 3, 1, 1.0), BoundaryError);
}

TEST_CASE("projection of polynomials") {
  const int l_max = 10;
  const auto rule = quadrature::gauss_legendre(2 * l_max + 16);
  std::vector<double> s(rule.size());

  for (std::size_t i = 0; i < rule.size(); ++i) s[i] = legendre_p(3, 2, rule.nodes[i]);
  auto c = project(s, rule, 2, l_max);
  for (int l = 2; l <= l_max; ++l) CHECK(std::abs(c[l - 2] - (l == 3 ? 1.0 : 0.0)) < 1e-10);

  for (std::size_t i = 0; i < rule.size(); ++i) s[i] = rule.nodes[i];
  c = project(s, rule, 0, l_max);
  for (int l = 0; l <= l_max; ++l) CHECK(std::abs(c[l] - (l == 1 ? 1.0 : 0.0)) < 1e-12);

  // project then re-sum reproduces a degree-l_max polynomial
  auto poly = [](double x) { return 1 - 2 * x + 0.5 * std::pow(x, 7) - 3 * std::pow(x, 10); };
  for (std::size_t i = 0; i < rule.size(); ++i) s[i] = poly(rule.nodes[i]);
  c = project(s, rule, 0, l_max);
  for (double x : {-0.8, 0.1, 0.95}) CHECK(resum(c, 0, x) == doctest::Approx(poly(x)).epsilon(1e-12));

  const auto short_rule = quadrature::gauss_legendre(2 * l_max + 15);
  std::vector<double> t(short_rule.size(), 1.0);
  CHECK_THROWS_AS(project(t, short_rule, 0, l_max), AccuracyError);
}

TEST_CASE("projection of (1+x)^(-1/4) P^2_0 against a substitution oracle") {
  // With 1 + x = v^4 the coefficient integrals become polynomial in v on [0, 2^(1/4)].
  const double eps = 0.25;
  const int l_max = 60;
  const auto rule = quadrature::gauss_jacobi(2 * l_max + 16, 0.0, -eps);
  std::vector<double> s(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) s[i] = legendre_p(2, 0, rule.nodes[i]);
  const auto c = project(s, rule, 0, l_max);

  const auto gl = quadrature::gauss_legendre(200);
  const double top = std::pow(2.0, 0.25);
  for (int l = 0; l <= l_max; l += 7) {
    double oracle = 0.0;
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double v = 0.5 * top * (gl.nodes[i] + 1.0);
      const double x = std::pow(v, 4) - 1.0;
      oracle += 0.5 * top * gl.weights[i] * 4.0 * v * v * legendre_p(2, 0, x) * legendre_p(l, 0, x);
    }
    oracle *= (2.0 * l + 1.0) / 2.0;
    CHECK(std::abs(c[l] - oracle) < 1e-12);
  }

  // Re-summation converges, slowly, because of the endpoint power law.
  auto f = [](double x) { return std::pow(1.0 + x, -0.25) * legendre_p(2, 0, x); };
  auto err_at = [&](int lm) {
    double worst = 0.0;
    for (double x : {-0.5, 0.0, 0.5})
      worst = std::max(worst, std::abs(resum(std::span<const double>(c.data(), lm + 1), 0, x) - f(x)));
    return worst;
  };
  CHECK(err_at(60) < err_at(15));
  CHECK(err_at(60) < 5e-3);
}
