#pragma once

#include <complex>
#include <string>
#include <vector>

#include "spinor_disc/geometry.hpp"

namespace spinor_disc::spectrum {

/// B_{n+1}(x) = kBPhase * radial_b(x); every stored array is real.
inline const std::complex<double> kBPhase{0.0, 1.0};

struct ModeParams {
  double epsilon = 0.0;
  int n = 0;
  int l0 = 0;
  /// Throws DomainError unless 0 <= epsilon < 1/2 and 0 <= n <= l0.
  void validate() const;
};

/// (m rho0)^2 = l0 (l0 + 1 - 2 epsilon)
double mass_squared(int l0, double epsilon);

struct ModeSolution {
  ModeParams params;
  double mass_sq = 0.0;
  std::vector<double> coeffs;  // a^l_n for l = n ... l0
  double norm_const = 0.0;
  double consistency_residual = 0.0;

  double coeff(int l) const;
  double mass() const;
};

/// Terminating recursion run downward from a^{l0} = 1 without the consistency gate.
/// consistency_residual is the lowest (l = n) relation, scaled by its largest term.
ModeSolution terminating_mode(const ModeParams& p);

/// As terminating_mode, but throws InconsistentRecursionError if the residual is >= 1e-8.
ModeSolution solve_coefficients(const ModeParams& p);

/// (1+x)^{-eps} sum_l a^l P^l_n(x). x <= -1 throws BoundaryError.
double radial_a(const ModeSolution& s, double x);

/// Real amplitude b with B = kBPhase * b:
///   b = -(1+x)^{-eps} / (m rho0 sqrt(1-x^2)) sum_l a^l {n P^l_n + [(l+n)(l+1) P^{l-1}_n - l(l-n+1) P^{l+1}_n]/(2l+1)}
/// l0 = 0 throws DomainError. |x| = 1 returns the limit 0 for n = 0, BoundaryError otherwise.
double radial_b(const ModeSolution& s, double x);

struct RadialProfiles {
  std::vector<double> x;
  std::vector<double> a;
  std::vector<double> b;  // all zero for l0 = 0
};

RadialProfiles sample_profiles(const ModeSolution& s, const std::vector<double>& grid);

/// Uniform grid of `points` values on [-1 + delta, 1 - delta].
std::vector<double> clamped_grid(int points, double delta);

struct BranchVerdict {
  bool normalizable = false;
  std::string reason;
  double exponent_one_minus_x = 0.0;  // power of (1 - x)
  double exponent_one_plus_x = 0.0;   // power of (1 + x)
};

/// Massless (m = 0) solutions with B = 0 (A-branch) or A = 0 (B-branch).
struct MasslessSolution {
  double epsilon = 0.0;
  int n = 0;
  BranchVerdict a_branch;
  BranchVerdict b_branch;
  /// (1-x)^{n/2} (1+x)^{-n/2-eps} 2^{n+eps}, i.e. rho^n f^eps at rho0 = 1.
  double a_profile(double x) const;
  /// (1-x)^{-n/2} (1+x)^{n/2+eps-1} 2^{-n+1-eps}, i.e. rho^{-n} f^{1-eps} at rho0 = 1.
  double b_profile(double x) const;
};

/// Square integrability on [-1, 1] requires -1 < n < 1 - 2 eps for A and 1 - 2 eps < n < 1 for B.
MasslessSolution massless_solution(double epsilon, int n);

/// N with 2 pi N^2 int (A^2 + b^2) dx = 1. Gauss-Jacobi with weight (1+x)^{-2 eps};
/// AccuracyError if doubling the node count changes the integral by more than 1e-9.
double normalize(const ModeSolution& s);

/// Leading behaviour near one end of the interval (n = 0 only).
///   North: A/A(1) = 1 + a_coefficient (1-x) + ...,   b/A(1) = b_coefficient (1-x)^{1/2} + ...
///   South: A = C (1+x)^{-eps} [1 + a_coefficient (1+x) + ...],  b/C = b_coefficient (1+x)^{1/2-eps} + ...
struct EndpointExpansion {
  geometry::Endpoint end;
  double a_exponent = 0.0;
  double a_coefficient = 0.0;
  double b_exponent = 0.0;
  double b_coefficient = 0.0;
};

EndpointExpansion endpoint_expansion(const ModeSolution& s, geometry::Endpoint end);

struct DivergenceTrace {
  double epsilon = 0.0;
  int n = 0;
  double mass_sq = 0.0;
  std::vector<double> coeffs;  // a^l for l = n ... l_stop + 1
  /// Degrees at which the leading factor of the recursion vanished and the
  /// series was restarted with a^{k+1} = 1 and all lower coefficients zero.
  std::vector<int> restarts;
  /// |a^l + (a^{l+1} + a^{l-1})/2| / max(|a^{l-1}|, |a^l|, |a^{l+1}|) at l = l_stop.
  double asymptotic_residual = 0.0;
  /// |a^{l_stop}| / |a^{l_stop/2}| (ratio < 1 means the tail decays).
  double tail_ratio = 0.0;
  /// sum a^2 2/(2l+1) over windows [n, 16), [16, 32), [32, 64), ...
  std::vector<double> window_norms;
  /// True when every window contributes at least half of the previous one.
  bool norm_diverges = false;
};

/// Upward, non-terminating run of the recursion from a^n = 1.
/// Throws DomainError if M is within 1e-9 of some l (l + 1 - 2 eps), l >= n.
DivergenceTrace divergence_scan(double epsilon, int n, double mass_sq, int l_stop);

}  // namespace spinor_disc::spectrum
