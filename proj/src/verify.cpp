#include "spinor_disc/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "spinor_disc/errors.hpp"
#include "spinor_disc/legendre.hpp"
#include "spinor_disc/quadrature.hpp"

namespace spinor_disc::verify {

namespace {

using Fn = std::function<double(double)>;

double d1(const Fn& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

// Seven-point stencils of sixth order, used by the second-order residuals.
double d1_wide(const Fn& f, double x, double h) {
  return (-f(x - 3 * h) + 9 * f(x - 2 * h) - 45 * f(x - h) + 45 * f(x + h) - 9 * f(x + 2 * h) + f(x + 3 * h)) /
         (60 * h);
}

double d2_wide(const Fn& f, double x, double h) {
  return (2 * f(x - 3 * h) - 27 * f(x - 2 * h) + 270 * f(x - h) - 490 * f(x) + 270 * f(x + h) - 27 * f(x + 2 * h) +
          2 * f(x + 3 * h)) /
         (180 * h * h);
}

void require_interior(const std::vector<double>& grid, double reach) {
  for (double x : grid)
    if (!(std::abs(x) + reach < 1.0))
      throw BoundaryError("residual grid must stay strictly inside (-1, 1)");
}

double scale_for(const ModeSolution& s, const std::vector<double>& grid) {
  double peak = 0.0;
  for (double x : grid) {
    double v = std::abs(spectrum::radial_a(s, x));
    if (s.params.l0 > 0) v += std::abs(spectrum::radial_b(s, x));
    peak = std::max(peak, v);
  }
  return std::max(1.0, peak);
}

Fn b_function(const ModeSolution& s) {
  if (s.params.l0 == 0) return [](double) { return 0.0; };
  return [&s](double x) { return spectrum::radial_b(s, x); };
}

void finish(ResidualReport& r) {
  r.max_norm = 0.0;
  r.worst_ratio = 0.0;
  r.budget.resize(r.x.size());
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    r.budget[i] = residual_budget(r.x[i]);
    r.max_norm = std::max(r.max_norm, r.residual[i]);
    r.worst_ratio = std::max(r.worst_ratio, r.residual[i] / r.budget[i]);
  }
}

}  // namespace

double residual_budget(double x) {
  const double ax = std::abs(x);
  if (ax <= 0.9) return 1e-8;
  if (ax <= 0.99) return 1e-6;
  return std::numeric_limits<double>::infinity();
}

double first_derivative_step(double x) { return std::max(1e-5, 1e-3 * (1.0 - std::abs(x))); }

double second_derivative_step(double x) { return std::max(1e-4, 1e-2 * (1.0 - std::abs(x))); }

ResidualReport first_order_residual(const ModeSolution& s, const std::vector<double>& grid) {
  for (double x : grid) require_interior({x}, 2.0 * first_derivative_step(x));
  const double eps = s.params.epsilon;
  const int n = s.params.n;
  const double mu = s.mass();
  const Fn A = [&s](double x) { return spectrum::radial_a(s, x); };
  const Fn b = b_function(s);

  ResidualReport r;
  r.tag = "first_order";
  r.params = s.params;
  r.x = grid;
  r.scale = scale_for(s, grid);
  for (double x : grid) {
    const double h = first_derivative_step(x);
    const double one_m_x2 = (1.0 - x) * (1.0 + x);
    const double root = std::sqrt(one_m_x2);
    const double q = std::sqrt((1.0 - x) / (1.0 + x));
    const double a = A(x);
    const double bv = b(x);
    const double l2a = -root * (d1(A, x, h) + n * a / one_m_x2) - eps * q * a;
    const double l1b = s.params.l0 == 0 ? 0.0 : -root * (d1(b, x, h) - (n + 1) * bv / one_m_x2) - (1.0 - eps) * q * bv;
    const double line1 = l1b + mu * a;
    const double line2 = mu * bv - l2a;
    r.residual.push_back(std::max(std::abs(line1), std::abs(line2)) / r.scale);
  }
  finish(r);
  return r;
}

ResidualReport second_order_residual(const ModeSolution& s, Component which, const std::vector<double>& grid) {
  for (double x : grid) require_interior({x}, 3.0 * second_derivative_step(x));
  if (which == Component::B && s.params.l0 == 0) throw DomainError("massless mode has no B component");
  const double eps = s.params.epsilon;
  const double n = s.params.n;
  const double m2 = s.mass_sq;
  const Fn f = which == Component::A ? Fn([&s](double x) { return spectrum::radial_a(s, x); }) : b_function(s);

  ResidualReport r;
  r.tag = which == Component::A ? "second_order_A" : "second_order_B";
  r.params = s.params;
  r.x = grid;
  r.scale = scale_for(s, grid);
  for (double x : grid) {
    const double h = second_derivative_step(x);
    const double one_m_x2 = (1.0 - x) * (1.0 + x);
    const double v = f(x);
    double potential;
    if (which == Component::A) {
      potential = -(n * n / one_m_x2 + eps * (1.0 + x + 2.0 * n) / (1.0 + x) + eps * eps * (1.0 - x) / (1.0 + x));
    } else {
      potential = -(n + 1.0) * (n + 1.0) / one_m_x2 + 2.0 * n * (1.0 - eps) / (1.0 + x) +
                  eps * (1.0 - eps) * (1.0 - x) / (1.0 + x);
    }
    const double res = one_m_x2 * d2_wide(f, x, h) - 2.0 * x * d1_wide(f, x, h) + (m2 + potential) * v;
    r.residual.push_back(std::abs(res) / r.scale);
  }
  finish(r);
  return r;
}

ResidualReport rho_residual(const ModeSolution& s, const std::vector<double>& rho_grid, const geometry::DiscGeometry& g) {
  const double eps = s.params.epsilon;
  const int n = s.params.n;
  const double mu = s.mass();
  const double r0 = g.rho0();
  for (double rho : rho_grid)
    if (!(rho > 0.0 && std::isfinite(rho))) throw BoundaryError("rho grid must be positive and finite");

  const Fn A = [&](double rho) { return spectrum::radial_a(s, g.rho_to_x(rho)); };
  const Fn xb = b_function(s);
  const Fn b = [&](double rho) { return xb(g.rho_to_x(rho)); };

  ResidualReport r;
  r.tag = "rho_first_order";
  r.params = s.params;
  double peak = 0.0;
  for (double rho : rho_grid) {
    const double x = g.rho_to_x(rho);
    r.x.push_back(x);
    peak = std::max(peak, std::abs(A(rho)) + std::abs(b(rho)));
  }
  r.scale = std::max(1.0, peak);
  for (double rho : rho_grid) {
    const double h = 1e-4 * rho;
    const double f = g.conformal_factor(rho);
    const double log_df = rho / (2.0 * r0 * r0) / f;  // f'/f
    const double a = A(rho);
    const double bv = b(rho);
    // sqrt(1-x^2) d/dx = -rho0 f d/drho and sqrt((1-x)/(1+x)) = rho / (2 rho0).
    const double l2a = r0 * f * (d1(A, rho, h) - n * a / rho - eps * log_df * a);
    const double l1b = r0 * f * (d1(b, rho, h) + (n + 1) * bv / rho - (1.0 - eps) * log_df * bv);
    const double line1 = l1b + mu * a;
    const double line2 = mu * bv - l2a;
    r.residual.push_back(std::max(std::abs(line1), std::abs(line2)) / r.scale);
  }
  finish(r);
  return r;
}

std::vector<double> fd_eigenvalues_at(double epsilon, int n, int count, int points) {
  if (!(epsilon >= 0.0 && epsilon < 0.5)) throw DomainError("epsilon must lie in [0, 1/2)");
  if (n < 0) throw DomainError("n must be >= 0");
  if (count < 1) throw DomainError("count must be >= 1");
  if (points < 16) throw DomainError("finite-volume grid needs at least 16 cells");

  // Sturm-Liouville form -(p u')' + w V u = M w u with
  //   p = (1-x)(1+x)^{1-2eps}, w = (1+x)^{-2eps}, V = n^2/(1-x^2) + 2 n eps/(1+x).
  const double e2 = 1.0 - 2.0 * epsilon;
  const int N = points;
  std::vector<double> x(N + 1);
  for (int i = 0; i <= N; ++i) x[i] = std::cos(std::numbers::pi * (1.0 - static_cast<double>(i) / N));
  x.front() = -1.0;
  x.back() = 1.0;

  auto w_integral = [&](double a, double b) { return (std::pow(1.0 + b, e2) - std::pow(1.0 + a, e2)) / e2; };
  std::vector<double> W(N + 1), flux(N);
  for (int i = 0; i < N; ++i) {
    const double xm = 0.5 * (x[i] + x[i + 1]);
    flux[i] = (1.0 - xm) * std::pow(1.0 + xm, e2) / (x[i + 1] - x[i]);
  }
  for (int i = 0; i <= N; ++i) {
    const double lo = i == 0 ? -1.0 : 0.5 * (x[i - 1] + x[i]);
    const double hi = i == N ? 1.0 : 0.5 * (x[i] + x[i + 1]);
    W[i] = w_integral(lo, hi);
  }
  std::vector<double> diag(N + 1, 0.0);
  for (int i = 0; i < N; ++i) {
    diag[i] += flux[i];
    diag[i + 1] += flux[i];
  }

  // n = 0 keeps both endpoints (natural condition); n >= 1 pins u = 0 there.
  const int first = n == 0 ? 0 : 1;
  const int last = n == 0 ? N : N - 1;
  const int size = last - first + 1;
  Eigen::VectorXd d(size), sub(size - 1);
  for (int i = first; i <= last; ++i) {
    double di = diag[i];
    if (n > 0) {
      const double V = n * n / ((1.0 - x[i]) * (1.0 + x[i])) + 2.0 * n * epsilon / (1.0 + x[i]);
      di += V * W[i];
    }
    d(i - first) = di / W[i];
  }
  for (int i = first; i < last; ++i) sub(i - first) = -flux[i] / std::sqrt(W[i] * W[i + 1]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw AccuracyError("tridiagonal eigensolve failed");
  const int k = std::min<int>(count, size);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  return out;
}

std::vector<double> fd_eigenvalues(double epsilon, int n, int count, int points) {
  const auto coarse = fd_eigenvalues_at(epsilon, n, count, points);
  const auto fine = fd_eigenvalues_at(epsilon, n, count, 2 * points);
  for (std::size_t i = 0; i < fine.size(); ++i) {
    if (std::abs(fine[i] - coarse[i]) > 1e-3 * std::max(1.0, std::abs(fine[i])))
      throw AccuracyError("finite-volume eigenvalue " + std::to_string(i) + " moved by more than 1e-3 on grid doubling");
  }
  return fine;
}

ProjectedCoefficients projection_recurrence_check(const ModeSolution& s, int l_max) {
  const auto& p = s.params;
  if (l_max < p.l0 + 20) throw DomainError("projection recurrence check needs l_max >= l0 + 20");
  const double eps = p.epsilon;
  const double m2 = s.mass_sq;
  const int n = p.n;

  ProjectedCoefficients out;
  out.params = p;
  out.l_max = l_max;

  // A = (1+x)^{-eps} u with u polynomial: exact under the Jacobi weight (1+x)^{-eps}.
  const auto rule = quadrature::gauss_jacobi(2 * l_max + 16, 0.0, -eps);
  std::vector<double> ua(rule.size()), ub(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    ua[i] = spectrum::radial_a(s, x) * std::pow(1.0 + x, eps);
    ub[i] = p.l0 == 0 ? 0.0 : spectrum::radial_b(s, x) * std::pow(1.0 + x, eps);
  }
  out.alpha = legendre::project(ua, rule, n, l_max);
  if (p.l0 > 0) out.beta = legendre::project(ub, rule, n + 1, l_max);

  auto bracket = [&](double l2) { return m2 - l2 - eps * (1.0 - eps); };
  auto abs_sum = [](const std::vector<double>& v) {
    double t = 0.0;
    for (double c : v) t += std::abs(c);
    return t;
  };

  const double alpha_sum = abs_sum(out.alpha);
  for (int l = n; l < l_max; ++l) {
    auto a = [&](int k) { return k < n ? 0.0 : out.alpha[k - n]; };
    const double cp = (l + n + 1.0) / (2.0 * l + 3.0) * bracket((l + 1.0) * (l + 2.0));
    const double c0 = m2 - l * (l + 1.0) - eps * (1.0 + eps + 2.0 * n);
    const double cm = (l - n) / (2.0 * l - 1.0) * bracket((l - 1.0) * l);
    const double res = cp * a(l + 1) + c0 * a(l) + cm * a(l - 1);
    const double scale = alpha_sum * std::max({std::abs(cp), std::abs(c0), std::abs(cm), 1.0});
    out.alpha_residual.push_back(std::abs(res) / scale);
    out.alpha_max = std::max(out.alpha_max, out.alpha_residual.back());
  }
  if (p.l0 > 0) {
    const double beta_sum = abs_sum(out.beta);
    const int nb = n + 1;
    for (int l = nb; l < l_max; ++l) {
      auto b = [&](int k) { return k < nb ? 0.0 : out.beta[k - nb]; };
      const double cp = (l + n + 2.0) / (2.0 * l + 3.0) * bracket((l + 1.0) * (l + 2.0));
      const double c0 = m2 - l * (l + 1.0) + (1.0 - eps) * (eps + 2.0 * n);
      const double cm = (l - n - 1.0) / (2.0 * l - 1.0) * bracket((l - 1.0) * l);
      const double res = cp * b(l + 1) + c0 * b(l) + cm * b(l - 1);
      const double scale = beta_sum * std::max({std::abs(cp), std::abs(c0), std::abs(cm), 1.0});
      out.beta_residual.push_back(std::abs(res) / scale);
      out.beta_max = std::max(out.beta_max, out.beta_residual.back());
    }
  }
  return out;
}

}  // namespace spinor_disc::verify
