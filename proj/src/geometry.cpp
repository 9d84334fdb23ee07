#include "spinor_disc/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinor_disc/errors.hpp"

namespace spinor_disc::geometry {

namespace {

void require_radius(double rho) {
  if (!(rho >= 0.0) || std::isinf(rho)) {
    throw DomainError("radius must be finite and >= 0, got " + std::to_string(rho));
  }
}

}  // namespace

DiscGeometry::DiscGeometry(double rho0) : rho0_(rho0) {
  if (!(rho0 > 0.0) || std::isinf(rho0)) {
    throw DomainError("rho0 must be finite and > 0");
  }
}

double DiscGeometry::volume() const noexcept {
  return std::numbers::pi * (2.0 * rho0_) * (2.0 * rho0_);
}

double DiscGeometry::conformal_factor(double rho) const {
  require_radius(rho);
  const double q = rho / (2.0 * rho0_);
  return 1.0 + q * q;
}

double DiscGeometry::conformal_factor_at_x(double x) const {
  if (!(x > -1.0)) throw InfiniteRadiusError("f diverges at x = -1");
  if (x > 1.0) throw DomainError("x must lie in (-1, 1]");
  return 2.0 / (1.0 + x);
}

double DiscGeometry::rho_to_x(double rho) const {
  require_radius(rho);
  const double q = rho / (2.0 * rho0_);
  const double q2 = q * q;
  return (1.0 - q2) / (1.0 + q2);
}

double DiscGeometry::x_to_rho(double x) const {
  if (x > 1.0) throw DomainError("x must lie in (-1, 1]");
  if (!(x > -1.0)) throw InfiniteRadiusError("x = -1 is the point at rho = infinity");
  // q^2 = (1 - x) / (1 + x)
  return 2.0 * rho0_ * std::sqrt((1.0 - x) / (1.0 + x));
}

double DiscGeometry::dx_drho(double rho) const {
  require_radius(rho);
  const double q = rho / (2.0 * rho0_);
  const double f = 1.0 + q * q;
  return -2.0 * q / (rho0_ * f * f);
}

SpinConnectionParam SpinConnectionParam::from_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 0.5)) {
    throw DomainError("epsilon must lie in [0, 1/2), got " + std::to_string(epsilon));
  }
  return SpinConnectionParam(epsilon);
}

SpinConnectionParam SpinConnectionParam::from_F(double F) {
  if (!(F > 0.0 && F <= 0.5)) {
    throw DomainError("F must satisfy 0 < 2F <= 1, got " + std::to_string(F));
  }
  return SpinConnectionParam(0.5 - F);
}

int SpinConnectionComponents::index(int s, int t, int s_prime) {
  auto bit = [](int k) {
    if (k != 5 && k != 6) throw DomainError("disc flat indices are 5 and 6");
    return k - 5;
  };
  return bit(s) * 4 + bit(t) * 2 + bit(s_prime);
}

std::complex<double> SpinConnectionComponents::operator()(int s, int t, int s_prime) const {
  return values_[index(s, t, s_prime)];
}

std::complex<double>& SpinConnectionComponents::at(int s, int t, int s_prime) {
  return values_[index(s, t, s_prime)];
}

SpinConnectionComponents spin_connection(const DiscGeometry& g,
                                         const SpinConnectionParam& p,
                                         double rho, double phi) {
  const double f = g.conformal_factor(rho);
  const double r0 = g.rho0();
  // e_{s' sigma} x^sigma = eta_{s's'} f^{-1} x^{(s')}
  const std::array<double, 2> lowered = {-rho * std::cos(phi) / f, -rho * std::sin(phi) / f};
  SpinConnectionComponents out;
  for (int sp = 5; sp <= 6; ++sp) {
    const std::complex<double> v{0.0, p.F() * f * lowered[sp - 5] / (r0 * r0)};
    out.at(5, 6, sp) = v;
    out.at(6, 5, sp) = -v;
  }
  return out;
}

}  // namespace spinor_disc::geometry
