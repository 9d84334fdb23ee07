#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "spinor_disc/quadrature.hpp"

namespace spinor_disc::legendre {

// Associated Legendre functions with the Condon-Shortley phase,
//   P^l_n(x) = (-1)^n (1 - x^2)^{n/2} d^n P_l / dx^n,
// the convention under which every relation in identity() holds as written.

/// P^l_n(x) by upward recursion in l from the closed seed at l = n.
double legendre_p(int l, int n, double x);

/// P^l_n(x) for l = n ... l_max (index l - n).
std::vector<double> legendre_column(int n, int l_max, double x);

/// d/dx P^l_n(x) from (1 - x^2) P' = [(l+n)(l+1) P^{l-1} - l(l-n+1) P^{l+1}] / (2l+1).
/// At x = +-1 the analytic limit is returned; it is infinite for n = 1 (BoundaryError).
double legendre_dp(int l, int n, double x);

/// int_{-1}^{1} (P^l_n)^2 dx = 2/(2l+1) (l+n)!/(l-n)!
double norm_integral(int l, int n);

enum class Identity {
  XRecurrence,         // eq:xPln
  SqrtLadderLower,     // (2l+1) sqrt(1-x^2) P^l_{n-2} = P^{l-1}_{n-1} - P^{l+1}_{n-1}
  SqrtLadderSame,      // (2l+1) sqrt(1-x^2) P^l_n = ... P^{l+1}_{n-1} ... P^{l-1}_{n-1}
  DerivativeRelation,  // eq:1mx2dxPln
  OneMinusXSquared,    // eq:1mx2Pln
  InverseSqrtUp,       // eq:1sqrtPln1
  InverseSqrtDown,     // eq:1sqrtPln2
};

inline constexpr Identity kAllIdentities[] = {
    Identity::XRecurrence,        Identity::SqrtLadderLower,  Identity::SqrtLadderSame,
    Identity::DerivativeRelation, Identity::OneMinusXSquared, Identity::InverseSqrtUp,
    Identity::InverseSqrtDown,
};

/// Tag names: eq:xPln, eq:sqrtPln_lower, eq:sqrtPln_same, eq:1mx2dxPln, eq:1mx2Pln,
/// eq:1sqrtPln1, eq:1sqrtPln2. Unknown tags throw UsageError.
Identity parse_identity(std::string_view tag);
std::string_view identity_tag(Identity id);

/// Smallest order n for which the identity's terms are all defined.
int identity_min_order(Identity id);

/// |LHS - RHS| / max(1, sum of |terms|) at (l, n, x), x in (-1, 1).
/// The derivative relation is checked against an independently recursed P'.
double verify_identity(Identity id, int l, int n, double x);

/// Expansion coefficients c^n_l = (2l+1)/2 (l-n)!/(l+n)! int f P^l_n dx, l = n ... l_max.
/// `samples` hold g(x_i) at the rule's nodes, where f = weight * g for the rule's Jacobi weight.
/// Throws AccuracyError if the rule has fewer than 2 l_max + 16 nodes.
std::vector<double> project(std::span<const double> samples, const quadrature::Rule& rule,
                            int n, int l_max);

/// sum_l c[l - n] P^l_n(x)
double resum(std::span<const double> coeffs, int n, double x);

}  // namespace spinor_disc::legendre
