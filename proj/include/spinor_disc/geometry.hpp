#pragma once

#include <array>
#include <complex>

namespace spinor_disc::geometry {

/// The two ends of the x interval. South (x = -1) is the point at rho = infinity.
enum class Endpoint { South = -1, North = 1 };

/// Infinite disc with conformal factor f = 1 + (rho / 2 rho0)^2, which gives it
/// the area and curvature of a sphere of radius rho0 minus one point.
class DiscGeometry {
 public:
  explicit DiscGeometry(double rho0 = 1.0);

  double rho0() const noexcept { return rho0_; }

  /// pi (2 rho0)^2
  double volume() const noexcept;

  /// f(rho); equals 2 / (1 + x(rho)).
  double conformal_factor(double rho) const;
  double conformal_factor_at_x(double x) const;

  /// x = (1 - q^2) / (1 + q^2) with q = rho / (2 rho0). Monotone decreasing.
  double rho_to_x(double rho) const;
  /// Inverse of rho_to_x on (-1, 1]. Throws InfiniteRadiusError for x <= -1.
  double x_to_rho(double x) const;

  /// d x / d rho at the given radius.
  double dx_drho(double rho) const;

 private:
  double rho0_;
};

/// Strength of the spin-connection field, carried as epsilon in [0, 1/2) with
/// 2F = 1 - 2 epsilon.
class SpinConnectionParam {
 public:
  static SpinConnectionParam from_epsilon(double epsilon);
  static SpinConnectionParam from_F(double F);

  double epsilon() const noexcept { return epsilon_; }
  double F() const noexcept { return 0.5 - epsilon_; }

 private:
  explicit SpinConnectionParam(double epsilon) : epsilon_(epsilon) {}
  double epsilon_;
};

/// Values of f^sigma_{s'} omega_{s t sigma} for s, t, s' in {5, 6}.
class SpinConnectionComponents {
 public:
  std::complex<double> operator()(int s, int t, int s_prime) const;
  std::complex<double>& at(int s, int t, int s_prime);

 private:
  static int index(int s, int t, int s_prime);
  std::array<std::complex<double>, 8> values_{};
};

/// Spin-connection field at polar coordinates (rho, phi) on the disc.
/// Flat indices are lowered with eta_{ss} = -1.
SpinConnectionComponents spin_connection(const DiscGeometry& g,
                                         const SpinConnectionParam& p,
                                         double rho, double phi);

}  // namespace spinor_disc::geometry
