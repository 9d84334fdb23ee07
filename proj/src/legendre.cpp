#include "spinor_disc/legendre.hpp"

#include <cmath>
#include <string>

#include "spinor_disc/errors.hpp"

namespace spinor_disc::legendre {

namespace {

void require_indices(int l, int n) {
  if (n < 0 || l < n) {
    throw DomainError("associated Legendre indices need 0 <= n <= l, got l=" + std::to_string(l) +
                      " n=" + std::to_string(n));
  }
}

void require_x(double x) {
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("x must lie in [-1, 1]");
}

// (l+n)! / (l-n)!
double factorial_ratio(int l, int n) {
  double r = 1.0;
  for (int k = l - n + 1; k <= l + n; ++k) r *= k;
  return r;
}

double seed(int n, double x) {
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  double p = 1.0;
  double odd = 1.0;
  for (int i = 1; i <= n; ++i) {
    p *= -odd * s;
    odd += 2.0;
  }
  return p;
}

// Zero outside 0 <= n <= l, which is what the ladder relations need at the edges.
double p_or_zero(int l, int n, double x) {
  if (n < 0 || l < n) return 0.0;
  return legendre_p(l, n, x);
}

// d/dx P^l_n by differentiating the three-term recurrence; independent of the
// derivative relation it is used to check.
double recursed_derivative(int l, int n, double x) {
  const double one_m_x2 = (1.0 - x) * (1.0 + x);
  double p_prev = 0.0;
  double p_cur = seed(n, x);
  double d_prev = 0.0;
  double d_cur = n == 0 ? 0.0 : -n * x * p_cur / one_m_x2;
  for (int k = n; k < l; ++k) {
    const double p_next = ((2.0 * k + 1.0) * x * p_cur - (k + n) * p_prev) / (k - n + 1.0);
    const double d_next =
        ((2.0 * k + 1.0) * (p_cur + x * d_cur) - (k + n) * d_prev) / (k - n + 1.0);
    p_prev = p_cur;
    p_cur = p_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
  return d_cur;
}

}  // namespace

double legendre_p(int l, int n, double x) {
  require_indices(l, n);
  require_x(x);
  double p_prev = 0.0;
  double p_cur = seed(n, x);
  for (int k = n; k < l; ++k) {
    const double p_next = ((2.0 * k + 1.0) * x * p_cur - (k + n) * p_prev) / (k - n + 1.0);
    p_prev = p_cur;
    p_cur = p_next;
  }
  return p_cur;
}

std::vector<double> legendre_column(int n, int l_max, double x) {
  require_indices(l_max, n);
  require_x(x);
  std::vector<double> out(static_cast<std::size_t>(l_max - n + 1));
  double p_prev = 0.0;
  double p_cur = seed(n, x);
  out[0] = p_cur;
  for (int k = n; k < l_max; ++k) {
    const double p_next = ((2.0 * k + 1.0) * x * p_cur - (k + n) * p_prev) / (k - n + 1.0);
    p_prev = p_cur;
    p_cur = p_next;
    out[static_cast<std::size_t>(k + 1 - n)] = p_cur;
  }
  return out;
}

double legendre_dp(int l, int n, double x) {
  require_indices(l, n);
  require_x(x);
  if (std::abs(x) == 1.0) {
    // P_l'(1) = l(l+1)/2 and P_l'(-1) = (-1)^{l+1} l(l+1)/2
    if (n == 0) return (x > 0.0 || l % 2 == 1 ? 1.0 : -1.0) * 0.5 * l * (l + 1.0);
    if (n == 1) throw BoundaryError("d/dx P^l_1 is unbounded at x = +-1");
    if (n == 2) {
      // P^l_2 = (1 - x^2) P_l''  =>  derivative -2 x P_l''(x) at the ends
      const double p2_at_one = (l - 1.0) * l * (l + 1.0) * (l + 2.0) / 8.0;
      return x > 0.0 ? -2.0 * p2_at_one : 2.0 * (l % 2 == 0 ? 1.0 : -1.0) * p2_at_one;
    }
    return 0.0;
  }
  const double lower = n <= l - 1 ? legendre_p(l - 1, n, x) : 0.0;
  const double upper = legendre_p(l + 1, n, x);
  const double rhs = ((l + n) * (l + 1.0) * lower - l * (l - n + 1.0) * upper) / (2.0 * l + 1.0);
  return rhs / ((1.0 - x) * (1.0 + x));
}

double norm_integral(int l, int n) {
  require_indices(l, n);
  return 2.0 / (2.0 * l + 1.0) * factorial_ratio(l, n);
}

Identity parse_identity(std::string_view tag) {
  for (Identity id : kAllIdentities) {
    if (identity_tag(id) == tag) return id;
  }
  throw UsageError("unknown Legendre identity tag '" + std::string(tag) + "'");
}

std::string_view identity_tag(Identity id) {
  switch (id) {
    case Identity::XRecurrence: return "eq:xPln";
    case Identity::SqrtLadderLower: return "eq:sqrtPln_lower";
    case Identity::SqrtLadderSame: return "eq:sqrtPln_same";
    case Identity::DerivativeRelation: return "eq:1mx2dxPln";
    case Identity::OneMinusXSquared: return "eq:1mx2Pln";
    case Identity::InverseSqrtUp: return "eq:1sqrtPln1";
    case Identity::InverseSqrtDown: return "eq:1sqrtPln2";
  }
  return "";
}

int identity_min_order(Identity id) {
  switch (id) {
    case Identity::SqrtLadderLower: return 2;
    case Identity::SqrtLadderSame:
    case Identity::InverseSqrtUp:
    case Identity::InverseSqrtDown: return 1;
    default: return 0;
  }
}

double verify_identity(Identity id, int l, int n, double x) {
  require_indices(l, n);
  if (n < identity_min_order(id)) {
    throw DomainError("order n=" + std::to_string(n) + " too small for " +
                      std::string(identity_tag(id)));
  }
  if (!(x > -1.0 && x < 1.0)) throw BoundaryError("identities are checked on the open interval");

  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  const double L = l;
  const double N = n;
  auto P = [x](int ll, int nn) { return p_or_zero(ll, nn, x); };

  double lhs = 0.0;
  double scale = 0.0;
  double rhs = 0.0;
  auto term = [&scale](double v) {
    scale += std::abs(v);
    return v;
  };

  switch (id) {
    case Identity::XRecurrence:
      lhs = term(x * P(l, n));
      rhs = (term((L + N) * P(l - 1, n)) + term((L - N + 1) * P(l + 1, n))) / (2 * L + 1);
      break;
    case Identity::SqrtLadderLower:
      lhs = term((2 * L + 1) * s * P(l, n - 2));
      rhs = term(P(l - 1, n - 1)) - term(P(l + 1, n - 1));
      break;
    case Identity::SqrtLadderSame:
      lhs = term((2 * L + 1) * s * P(l, n));
      rhs = term((L - N + 2) * (L - N + 1) * P(l + 1, n - 1)) -
            term((L + N) * (L + N - 1) * P(l - 1, n - 1));
      break;
    case Identity::DerivativeRelation:
      lhs = term((1.0 - x) * (1.0 + x) * recursed_derivative(l, n, x));
      rhs = (term((L + N) * (L + 1) * P(l - 1, n)) - term(L * (L - N + 1) * P(l + 1, n))) /
            (2 * L + 1);
      break;
    case Identity::OneMinusXSquared: {
      lhs = term((1.0 - x) * (1.0 + x) * P(l, n));
      const double diag =
          2 * L + 1 - (L + N) * (L - N) / (2 * L - 1) - (L - N + 1) * (L + N + 1) / (2 * L + 3);
      rhs = (term(diag * P(l, n)) - term((L + N) * (L + N - 1) / (2 * L - 1) * P(l - 2, n)) -
             term((L - N + 1) * (L - N + 2) / (2 * L + 3) * P(l + 2, n))) /
            (2 * L + 1);
      break;
    }
    case Identity::InverseSqrtUp:
      lhs = term(P(l, n) / s);
      rhs = -(term((L - N + 2) * (L - N + 1) * P(l + 1, n - 1)) + term(P(l + 1, n + 1))) /
            (2 * N);
      break;
    case Identity::InverseSqrtDown:
      lhs = term(P(l, n) / s);
      rhs = -(term((L + N) * (L + N - 1) * P(l - 1, n - 1)) + term(P(l - 1, n + 1))) / (2 * N);
      break;
  }
  return std::abs(lhs - rhs) / std::max(1.0, scale);
}

std::vector<double> project(std::span<const double> samples, const quadrature::Rule& rule,
                            int n, int l_max) {
  require_indices(l_max, n);
  if (samples.size() != rule.size()) {
    throw DomainError("one sample per quadrature node is required");
  }
  const std::size_t needed = static_cast<std::size_t>(2 * l_max + 16);
  if (rule.size() < needed) {
    throw AccuracyError("projection to l_max=" + std::to_string(l_max) + " needs at least " +
                        std::to_string(needed) + " nodes, rule has " +
                        std::to_string(rule.size()));
  }
  std::vector<double> c(static_cast<std::size_t>(l_max - n + 1), 0.0);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto col = legendre_column(n, l_max, rule.nodes[i]);
    const double wg = rule.weights[i] * samples[i];
    for (std::size_t k = 0; k < col.size(); ++k) c[k] += wg * col[k];
  }
  for (int l = n; l <= l_max; ++l) {
    c[static_cast<std::size_t>(l - n)] *= (2.0 * l + 1.0) / 2.0 / factorial_ratio(l, n);
  }
  return c;
}

double resum(std::span<const double> coeffs, int n, double x) {
  if (coeffs.empty()) return 0.0;
  const int l_max = n + static_cast<int>(coeffs.size()) - 1;
  const auto col = legendre_column(n, l_max, x);
  double sum = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) sum += coeffs[k] * col[k];
  return sum;
}

}  // namespace spinor_disc::legendre
