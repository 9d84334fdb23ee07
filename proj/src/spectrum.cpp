#include "spinor_disc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spinor_disc/errors.hpp"
#include "spinor_disc/legendre.hpp"
#include "spinor_disc/quadrature.hpp"

namespace spinor_disc::spectrum {

namespace {

constexpr double kConsistencyTolerance = 1e-8;

void require_epsilon(double eps) {
  if (!(eps >= 0.0 && eps < 0.5)) throw DomainError("epsilon must lie in [0, 1/2), got " + std::to_string(eps));
}

// Coefficients of a^{k-1}, a^k, a^{k+1} in the degree-k relation.
struct Relation {
  double minus, centre, plus;
};

Relation relation(double eps, int n, double m2, int k) {
  Relation r{};
  r.minus = k == n ? 0.0 : (k - n) / (2.0 * k - 1.0) * (m2 - (k - 1.0) * (k - 2.0 * eps));
  r.centre = m2 - k * (k + 1.0) - 2.0 * n * eps;
  r.plus = (k + n + 1.0) / (2.0 * k + 3.0) * (m2 - (k + 2.0) * (k + 1.0 + 2.0 * eps));
  return r;
}

// sum_l a^l P^l_n(x)
double polynomial_part(const ModeSolution& s, double x) {
  const int n = s.params.n;
  const auto p = legendre::legendre_column(n, s.params.l0, x);
  double sum = 0.0;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) sum += s.coeffs[i] * p[i];
  return sum;
}

// b (1+x)^{eps}, valid for |x| < 1.
double b_without_weight(const ModeSolution& s, double x) {
  const int n = s.params.n;
  const int l0 = s.params.l0;
  const auto p = legendre::legendre_column(n, l0 + 1, x);
  auto P = [&](int l) { return l < n ? 0.0 : p[l - n]; };
  double sum = 0.0;
  for (int l = n; l <= l0; ++l) {
    const double bracket = ((l + n) * (l + 1.0) * P(l - 1) - l * (l - n + 1.0) * P(l + 1)) / (2.0 * l + 1.0);
    sum += s.coeff(l) * (n * P(l) + bracket);
  }
  return -sum / (s.mass() * std::sqrt((1.0 - x) * (1.0 + x)));
}

}  // namespace

void ModeParams::validate() const {
  require_epsilon(epsilon);
  if (n < 0) throw DomainError("n must be >= 0 for massive modes");
  if (l0 < n) throw DomainError("l0 must be >= n (got n=" + std::to_string(n) + ", l0=" + std::to_string(l0) + ")");
}

double mass_squared(int l0, double epsilon) {
  require_epsilon(epsilon);
  if (l0 < 0) throw DomainError("l0 must be >= 0");
  return l0 * (l0 + 1.0 - 2.0 * epsilon);
}

double ModeSolution::coeff(int l) const {
  const int i = l - params.n;
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0.0;
  return coeffs[i];
}

double ModeSolution::mass() const { return std::sqrt(mass_sq); }

ModeSolution terminating_mode(const ModeParams& p) {
  p.validate();
  ModeSolution s;
  s.params = p;
  s.mass_sq = mass_squared(p.l0, p.epsilon);
  const int count = p.l0 - p.n + 1;
  // a[i] holds a^{n+i}; two trailing zeros carry the termination.
  std::vector<double> a(count + 2, 0.0);
  a[count - 1] = 1.0;
  for (int k = p.l0; k > p.n; --k) {
    const Relation r = relation(p.epsilon, p.n, s.mass_sq, k);
    const int i = k - p.n;
    a[i - 1] = -(r.centre * a[i] + r.plus * a[i + 1]) / r.minus;
  }
  const Relation low = relation(p.epsilon, p.n, s.mass_sq, p.n);
  const double t0 = low.centre * a[0];
  const double t1 = low.plus * a[1];
  const double scale = std::max(std::abs(t0), std::abs(t1));
  s.consistency_residual = scale == 0.0 ? 0.0 : std::abs(t0 + t1) / scale;
  a.resize(count);
  s.coeffs = std::move(a);
  s.norm_const = normalize(s);
  return s;
}

ModeSolution solve_coefficients(const ModeParams& p) {
  ModeSolution s = terminating_mode(p);
  if (s.consistency_residual >= kConsistencyTolerance) {
    throw InconsistentRecursionError(
        "terminating recursion is inconsistent at eps=" + std::to_string(p.epsilon) + ", n=" + std::to_string(p.n) +
            ", l0=" + std::to_string(p.l0),
        s.consistency_residual);
  }
  return s;
}

double radial_a(const ModeSolution& s, double x) {
  if (x <= -1.0) throw BoundaryError("radial_a diverges at x = -1");
  if (x > 1.0) throw DomainError("x must not exceed 1");
  return std::pow(1.0 + x, -s.params.epsilon) * polynomial_part(s, x);
}

double radial_b(const ModeSolution& s, double x) {
  if (s.params.l0 == 0) throw DomainError("massless mode has no B component");
  if (x < -1.0 || x > 1.0) throw DomainError("x must lie in [-1, 1]");
  if (std::abs(x) == 1.0) {
    if (s.params.n == 0) return 0.0;
    throw BoundaryError("radial_b is singular at |x| = 1 for n > 0");
  }
  return std::pow(1.0 + x, -s.params.epsilon) * b_without_weight(s, x);
}

RadialProfiles sample_profiles(const ModeSolution& s, const std::vector<double>& grid) {
  RadialProfiles out;
  out.x = grid;
  out.a.reserve(grid.size());
  out.b.reserve(grid.size());
  for (double x : grid) {
    out.a.push_back(radial_a(s, x));
    out.b.push_back(s.params.l0 == 0 ? 0.0 : radial_b(s, x));
  }
  return out;
}

std::vector<double> clamped_grid(int points, double delta) {
  if (points < 2) throw DomainError("grid needs at least two points");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  std::vector<double> x(points);
  const double lo = -1.0 + delta;
  const double step = (2.0 - 2.0 * delta) / (points - 1);
  for (int i = 0; i < points; ++i) x[i] = lo + i * step;
  x.back() = 1.0 - delta;
  return x;
}

double MasslessSolution::a_profile(double x) const {
  if (x <= -1.0) throw BoundaryError("massless A profile at x = -1");
  return std::pow(1.0 - x, 0.5 * n) * std::pow(1.0 + x, -0.5 * n - epsilon) * std::pow(2.0, n + epsilon);
}

double MasslessSolution::b_profile(double x) const {
  if (x <= -1.0 || x >= 1.0) throw BoundaryError("massless B profile needs |x| < 1");
  return std::pow(1.0 - x, -0.5 * n) * std::pow(1.0 + x, 0.5 * n + epsilon - 1.0) * std::pow(2.0, -n + 1.0 - epsilon);
}

MasslessSolution massless_solution(double epsilon, int n) {
  require_epsilon(epsilon);
  MasslessSolution m;
  m.epsilon = epsilon;
  m.n = n;
  const double upper = 1.0 - 2.0 * epsilon;

  // int (1-x)^{2p} (1+x)^{2q} dx is finite iff 2p > -1 and 2q > -1.
  m.a_branch.exponent_one_minus_x = 0.5 * n;
  m.a_branch.exponent_one_plus_x = -0.5 * n - epsilon;
  m.a_branch.normalizable = -1 < n && n < upper;
  if (n <= -1)
    m.a_branch.reason = "|A|^2 ~ (1-x)^n is not integrable at x = 1";
  else if (n >= upper)
    m.a_branch.reason = "|A|^2 ~ (1+x)^{-n-2eps} is not integrable at x = -1";
  else
    m.a_branch.reason = "-1 < n < 1 - 2eps";

  m.b_branch.exponent_one_minus_x = -0.5 * n;
  m.b_branch.exponent_one_plus_x = 0.5 * n + epsilon - 1.0;
  m.b_branch.normalizable = upper < n && n < 1;
  if (n >= 1)
    m.b_branch.reason = "|B|^2 ~ (1-x)^{-n} is not integrable at x = 1";
  else if (n <= upper)
    m.b_branch.reason = "|B|^2 ~ (1+x)^{n+2eps-2} is not integrable at x = -1";
  else
    m.b_branch.reason = "1 - 2eps < n < 1";
  return m;
}

double normalize(const ModeSolution& s) {
  const double eps = s.params.epsilon;
  const bool has_b = s.params.l0 > 0;
  // Both |A|^2 and b^2 are (1+x)^{-2 eps} times a polynomial of degree <= 2 l0.
  auto integral = [&](int nodes) {
    const auto rule = quadrature::gauss_jacobi(nodes, 0.0, -2.0 * eps);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double x = rule.nodes[i];
      const double u = polynomial_part(s, x);
      const double v = has_b ? b_without_weight(s, x) : 0.0;
      sum += rule.weights[i] * (u * u + v * v);
    }
    return sum;
  };
  const int base = s.params.l0 + 4;
  const double coarse = integral(base);
  const double fine = integral(2 * base);
  if (std::abs(fine - coarse) > 1e-9 * std::abs(fine)) {
    throw AccuracyError("normalization integral did not converge under node doubling");
  }
  return 1.0 / std::sqrt(2.0 * std::numbers::pi * fine);
}

EndpointExpansion endpoint_expansion(const ModeSolution& s, geometry::Endpoint end) {
  if (s.params.n != 0) throw DomainError("endpoint expansion is available for n = 0 only");
  const double eps = s.params.epsilon;
  require_epsilon(eps);
  const double m2 = s.mass_sq;
  const double mu = std::sqrt(m2);
  EndpointExpansion e{};
  e.end = end;
  if (end == geometry::Endpoint::North) {
    e.a_exponent = 0.0;
    e.a_coefficient = 0.5 * (eps - m2);
    e.b_exponent = 0.5;
    e.b_coefficient = -std::numbers::sqrt2 * mu / 2.0;
  } else {
    e.a_exponent = -eps;
    e.a_coefficient = -m2 / (2.0 * (1.0 - 2.0 * eps));
    e.b_exponent = 0.5 - eps;
    e.b_coefficient = std::numbers::sqrt2 * mu / (2.0 * (1.0 - 2.0 * eps));
  }
  return e;
}

DivergenceTrace divergence_scan(double epsilon, int n, double mass_sq, int l_stop) {
  require_epsilon(epsilon);
  if (n < 0) throw DomainError("n must be >= 0");
  if (l_stop < n + 2) throw DomainError("l_stop must exceed n + 1");
  for (int l = n;; ++l) {
    const double ev = l * (l + 1.0 - 2.0 * epsilon);
    if (std::abs(mass_sq - ev) < 1e-9)
      throw DomainError("M = " + std::to_string(mass_sq) + " is the eigenvalue of l0 = " + std::to_string(l));
    if (ev > mass_sq + 1.0) break;
  }

  DivergenceTrace t;
  t.epsilon = epsilon;
  t.n = n;
  t.mass_sq = mass_sq;
  std::vector<double>& a = t.coeffs;
  a.assign(l_stop - n + 2, 0.0);
  a[0] = 1.0;
  for (int k = n; k <= l_stop; ++k) {
    const Relation r = relation(epsilon, n, mass_sq, k);
    const int i = k - n;
    const double lower = i > 0 ? a[i - 1] : 0.0;
    if (std::abs(r.plus) < 1e-12 * std::max(1.0, std::abs(mass_sq))) {
      // The relation no longer involves a^{k+1}; the only formal series starts here.
      std::fill(a.begin(), a.begin() + i + 1, 0.0);
      a[i + 1] = 1.0;
      t.restarts.push_back(k + 1);
      continue;
    }
    a[i + 1] = -(r.minus * lower + r.centre * a[i]) / r.plus;
  }

  const int i = l_stop - n;
  const double scale = std::max({std::abs(a[i - 1]), std::abs(a[i]), std::abs(a[i + 1])});
  t.asymptotic_residual = scale == 0.0 ? 0.0 : std::abs(a[i] + 0.5 * (a[i + 1] + a[i - 1])) / scale;
  const double mid = std::abs(a[(l_stop / 2 > n ? l_stop / 2 : n + 1) - n]);
  t.tail_ratio = mid == 0.0 ? 0.0 : std::abs(a[i]) / mid;

  int lo = n;
  for (int hi = 16; hi <= l_stop + 1; hi *= 2) {
    if (hi <= lo) continue;
    double w = 0.0;
    for (int l = lo; l < hi; ++l) w += a[l - n] * a[l - n] * 2.0 / (2.0 * l + 1.0);
    t.window_norms.push_back(w);
    lo = hi;
  }
  t.norm_diverges = t.window_norms.size() >= 3;
  for (std::size_t w = 1; w < t.window_norms.size(); ++w)
    if (t.window_norms[w] < 0.5 * t.window_norms[w - 1]) t.norm_diverges = false;
  return t;
}

}  // namespace spinor_disc::spectrum
