#include "spinor_disc/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "spinor_disc/errors.hpp"

namespace spinor_disc::clifford {

namespace {

const Complex kI{0.0, 1.0};

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix pauli(char which) {
  Matrix m = Matrix::Zero(2, 2);
  switch (which) {
    case 'x': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 'y': m(0, 1) = -kI; m(1, 0) = kI; break;
    case 'z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
  }
  return m;
}

// Z x ... x Z x P x I x ... x I with P at factor `slot`.
Matrix string_operator(int factors, int slot, char p) {
  Matrix out = Matrix::Identity(1, 1);
  for (int j = 0; j < factors; ++j) {
    const char c = j < slot ? 'z' : (j == slot ? p : 'i');
    out = kron(out, pauli(c));
  }
  return out;
}

bool close(Complex a, Complex b) { return std::abs(a - b) < 1e-12; }

std::string k_label(Complex k) {
  std::string s = (k.real() + k.imag()) > 0 ? "+" : "-";
  if (std::abs(k.imag()) > 0.5) s += "i";
  return s;
}

std::string pair_label(const CartanPair& p) { return std::to_string(p.a) + std::to_string(p.b); }

// Product order used for states: pairs with labels >= 5 first, then 03 and 12.
std::vector<CartanPair> display_order(const GammaSet& g) {
  std::vector<CartanPair> out;
  for (const auto& p : g.cartan_pairs())
    if (p.a >= 5) out.push_back(p);
  for (const auto& p : g.cartan_pairs())
    if (p.a < 5) out.push_back(p);
  return out;
}

Complex starting_k(const GammaSet& g, const CartanPair& p) {
  return g.eta(p.a) * g.eta(p.b) < 0 ? kI : Complex{1.0, 0.0};
}

Matrix tag_matrix(const GammaSet& g, const FactorTag& t) {
  return t.kind == FactorKind::Nilpotent ? nilpotent(g, t.pair.a, t.pair.b, t.k)
                                         : projector(g, t.pair.a, t.pair.b, t.k);
}

}  // namespace

GammaSet GammaSet::build(int d) {
  if (d < 2 || d > 10 || d % 2 != 0)
    throw UsageError("unsupported dimension d=" + std::to_string(d) + " (need even 2..10)");
  GammaSet g;
  g.d_ = d;
  if (d == 2) {
    g.labels_ = {0, 1};
    g.cartan_ = {{0, 1}};
  } else {
    g.labels_ = {0, 1, 2, 3};
    g.cartan_ = {{0, 3}, {1, 2}};
    for (int a = 5; a + 1 <= d; a += 2) {
      g.labels_.push_back(a);
      g.labels_.push_back(a + 1);
      g.cartan_.push_back({a, a + 1});
    }
  }
  const int factors = d / 2;
  g.gammas_.resize(g.labels_.size());
  for (int slot = 0; slot < factors; ++slot) {
    const CartanPair& p = g.cartan_[slot];
    const int pa = g.position(p.a);
    const int pb = g.position(p.b);
    g.gammas_[pa] = string_operator(factors, slot, 'x');
    g.gammas_[pb] = string_operator(factors, slot, 'y');
    if (g.eta(p.a) < 0) g.gammas_[pa] *= kI;
    if (g.eta(p.b) < 0) g.gammas_[pb] *= kI;
  }
  const int dim = 1 << factors;
  g.identity_ = Matrix::Identity(dim, dim);

  Matrix hand = g.identity_;
  Complex phase = 1.0;
  for (int j = 0; j < factors; ++j) phase *= kI;
  for (std::size_t i = 0; i < g.labels_.size(); ++i) {
    const Complex root = g.eta(g.labels_[i]) > 0 ? Complex{1.0, 0.0} : kI;
    hand = hand * (root * g.gammas_[i]);
  }
  g.handedness_ = phase * hand;
  return g;
}

int GammaSet::position(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw DomainError("index label " + std::to_string(label) + " not present for d=" + std::to_string(d_));
  return static_cast<int>(it - labels_.begin());
}

bool GammaSet::has_label(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

double GammaSet::eta(int label) const {
  position(label);
  return label == 0 ? 1.0 : -1.0;
}

const Matrix& GammaSet::gamma(int label) const { return gammas_[position(label)]; }

Matrix s_ab(const GammaSet& g, int a, int b) {
  if (a == b) throw DomainError("S^ab needs a != b");
  const Matrix& ga = g.gamma(a);
  const Matrix& gb = g.gamma(b);
  return (kI / 4.0) * (ga * gb - gb * ga);
}

std::vector<Complex> allowed_k(const GammaSet& g, int a, int b) {
  const double k2 = g.eta(a) * g.eta(b);
  if (k2 > 0) return {Complex{1.0, 0.0}, Complex{-1.0, 0.0}};
  return {kI, -kI};
}

static void check_k(const GammaSet& g, int a, int b, Complex k) {
  if (a == b) throw DomainError("a Clifford pair needs a != b");
  if (!close(k * k, Complex{g.eta(a) * g.eta(b), 0.0}))
    throw DomainError("k^2 must equal eta^aa eta^bb");
}

Matrix nilpotent(const GammaSet& g, int a, int b, Complex k) {
  check_k(g, a, b, k);
  return 0.5 * (g.gamma(a) + (g.eta(a) / (kI * k)) * g.gamma(b));
}

Matrix projector(const GammaSet& g, int a, int b, Complex k) {
  check_k(g, a, b, k);
  return 0.5 * (g.identity() + (kI / k) * g.gamma(a) * g.gamma(b));
}

std::string FactorTag::str() const {
  const std::string pl = pair_label(pair);
  if (kind == FactorKind::Nilpotent) return "(" + pl + ")(" + k_label(k) + ")";
  return "[" + pl + "][" + k_label(k) + "]";
}

std::string BasisState::str() const {
  std::string s;
  for (const auto& t : tags) s += t.str();
  return s + "psi0";
}

Vector vacuum(const GammaSet& g) {
  Matrix p = g.identity();
  for (const auto& pair : g.cartan_pairs()) p = p * projector(g, pair.a, pair.b, -starting_k(g, pair));
  Eigen::Index best = 0;
  double best_norm = -1.0;
  for (Eigen::Index j = 0; j < p.cols(); ++j) {
    const double nrm = p.col(j).norm();
    if (nrm > best_norm + 1e-12) {
      best_norm = nrm;
      best = j;
    }
  }
  Vector v = p.col(best) / best_norm;
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  v *= std::conj(v(imax)) / std::abs(v(imax));
  return v;
}

Vector apply_tags(const GammaSet& g, const std::vector<FactorTag>& tags) {
  Matrix m = g.identity();
  for (const auto& t : tags) m = m * tag_matrix(g, t);
  return m * vacuum(g);
}

std::vector<BasisState> weyl_basis(const GammaSet& g) {
  const std::vector<CartanPair> order = display_order(g);
  const int factors = static_cast<int>(order.size());
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << factors); ++m)
    if (__builtin_popcount(m) % 2 == 0) masks.push_back(m);
  // The first pair changes slowest; the remaining ones are compared from the
  // last pair backwards, so in d=6 the S12 spin runs inside the S56 spin and
  // the list reads phi^1_1, phi^1_2, phi^2_1, phi^2_2.
  std::stable_sort(masks.begin(), masks.end(), [&](unsigned x, unsigned y) {
    for (int step = 0; step < factors; ++step) {
      const int i = step == 0 ? 0 : factors - step;
      const unsigned bx = (x >> i) & 1u, by = (y >> i) & 1u;
      if (bx != by) return bx < by;
    }
    return false;
  });

  std::vector<BasisState> out;
  for (unsigned mask : masks) {
    BasisState s;
    for (int i = 0; i < factors; ++i) {
      const CartanPair& p = order[i];
      const Complex k = starting_k(g, p);
      if ((mask >> i) & 1u)
        s.tags.push_back({p, FactorKind::Projector, -k});
      else
        s.tags.push_back({p, FactorKind::Nilpotent, k});
    }
    s.vec = apply_tags(g, s.tags);
    const Complex h = s.vec.dot(g.handedness() * s.vec) / s.vec.squaredNorm();
    s.handedness = h.real() > 0 ? 1 : -1;
    s.name = s.str();
    out.push_back(std::move(s));
  }
  return out;
}

Matrix ladder_n(const GammaSet& g, int upper_sign, int lower_sign) {
  if (g.d() < 4) throw DomainError("ladder operators need d >= 4");
  if (std::abs(upper_sign) != 1 || std::abs(lower_sign) != 1) throw DomainError("ladder signs must be +1 or -1");
  const Complex k03 = upper_sign == lower_sign ? -kI : kI;
  const Complex k12 = upper_sign > 0 ? 1.0 : -1.0;
  // N^+_+ = -(03)(-i)(12)(+), N^-_+ = -(03)(+i)(12)(-),
  // N^+_- =  (03)(+i)(12)(+), N^-_- =  (03)(-i)(12)(-).
  const double sign = lower_sign > 0 ? -1.0 : 1.0;
  return sign * nilpotent(g, 0, 3, k03) * nilpotent(g, 1, 2, k12);
}

double m56_eigenvalue(const GammaSet& g, const Vector& spin_state, int angular_power) {
  if (g.d() < 6) throw DomainError("S^56 needs d >= 6");
  const double nrm2 = spin_state.squaredNorm();
  if (nrm2 == 0.0) throw DomainError("zero spin state");
  const Vector sv = s_ab(g, 5, 6) * spin_state;
  const Complex lambda = spin_state.dot(sv) / nrm2;
  if ((sv - lambda * spin_state).norm() > 1e-12 * std::sqrt(nrm2) || std::abs(lambda.imag()) > 1e-12)
    throw DomainError("spin state has no definite S^56");
  return angular_power + lambda.real();
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

namespace {

struct Tally {
  FamilyCheck fc;
  void add(double err) {
    ++fc.checks;
    fc.max_error = std::max(fc.max_error, err);
  }
};

}  // namespace

std::vector<FamilyCheck> check_identities(const GammaSet& g, double tol) {
  const auto& L = g.labels();
  const Matrix& I = g.identity();
  std::deque<Tally> t;  // stable references
  auto family = [&](const std::string& name) -> Tally& {
    t.push_back({});
    t.back().fc.family = name;
    return t.back();
  };

  {
    Tally& f = family("anticommutator");
    for (int a : L)
      for (int b : L) {
        const double eta_ab = a == b ? g.eta(a) : 0.0;
        f.add(max_abs_diff(g.gamma(a) * g.gamma(b) + g.gamma(b) * g.gamma(a), 2.0 * eta_ab * I));
      }
  }
  {
    Tally& f = family("hermiticity");
    for (int a : L) f.add(max_abs_diff(g.gamma(a).adjoint(), g.eta(a) * g.gamma(a)));
    for (int a : L)
      for (int b : L)
        if (a != b) {
          const Matrix s = s_ab(g, a, b);
          f.add(max_abs_diff(s.adjoint(), g.eta(a) * g.eta(b) * s));
        }
  }
  {
    Tally& f = family("handedness");
    const Matrix& h = g.handedness();
    f.add(max_abs_diff(h.adjoint(), h));
    f.add(max_abs_diff(h * h, I));
    for (int a : L) f.add(max_abs_diff(h * g.gamma(a) + g.gamma(a) * h, Matrix::Zero(I.rows(), I.cols())));
  }
  {
    Tally& f = family("lorentz_algebra");
    auto s_or_zero = [&](int a, int b) -> Matrix {
      return a == b ? Matrix::Zero(I.rows(), I.cols()) : s_ab(g, a, b);
    };
    auto eta = [&](int a, int b) { return a == b ? g.eta(a) : 0.0; };
    for (int a : L)
      for (int b : L)
        for (int c : L)
          for (int d : L) {
            if (a == b || c == d) continue;
            const Matrix sab = s_ab(g, a, b);
            const Matrix scd = s_ab(g, c, d);
            const Matrix lhs = sab * scd - scd * sab;
            const Matrix rhs = kI * (eta(a, d) * s_or_zero(b, c) + eta(b, c) * s_or_zero(a, d) -
                                     eta(a, c) * s_or_zero(b, d) - eta(b, d) * s_or_zero(a, c));
            f.add(max_abs_diff(lhs, rhs));
          }
  }
  {
    Tally& f = family("cartan_commute");
    for (const auto& p : g.cartan_pairs())
      for (const auto& q : g.cartan_pairs()) {
        const Matrix sp = s_ab(g, p.a, p.b);
        const Matrix sq = s_ab(g, q.a, q.b);
        f.add(max_abs_diff(sp * sq, sq * sp));
      }
  }

  Tally& eigen = family("grapheigen");
  Tally& binoms = family("graphbinoms");
  Tally& herstr = family("graphherstr");
  Tally& gaction = family("gamma_action");
  for (const auto& p : g.cartan_pairs()) {
    const int a = p.a, b = p.b;
    const Matrix s = s_ab(g, a, b);
    const double ea = g.eta(a);
    const Matrix Z = Matrix::Zero(I.rows(), I.cols());
    for (Complex k : allowed_k(g, a, b)) {
      const Matrix nk = nilpotent(g, a, b, k), nm = nilpotent(g, a, b, -k);
      const Matrix pk = projector(g, a, b, k), pm = projector(g, a, b, -k);
      eigen.add(max_abs_diff(s * nk, 0.5 * k * nk));
      eigen.add(max_abs_diff(s * pk, 0.5 * k * pk));

      binoms.add(max_abs_diff(nk * nk, Z));
      binoms.add(max_abs_diff(nk * nm, ea * pk));
      binoms.add(max_abs_diff(nm * nk, ea * pm));
      binoms.add(max_abs_diff(nm * nm, Z));
      binoms.add(max_abs_diff(pk * pk, pk));
      binoms.add(max_abs_diff(pk * pm, Z));
      binoms.add(max_abs_diff(pm * pk, Z));
      binoms.add(max_abs_diff(pm * pm, pm));
      binoms.add(max_abs_diff(nk * pk, Z));
      binoms.add(max_abs_diff(pk * nk, nk));
      binoms.add(max_abs_diff(nm * pk, nm));
      binoms.add(max_abs_diff(nm * pm, Z));
      binoms.add(max_abs_diff(nk * pm, nk));
      binoms.add(max_abs_diff(pk * nm, Z));
      binoms.add(max_abs_diff(pm * nk, Z));
      binoms.add(max_abs_diff(pm * nm, nm));

      herstr.add(max_abs_diff(nk.adjoint(), ea * nm));
      herstr.add(max_abs_diff(pk.adjoint(), pk));

      gaction.add(max_abs_diff(g.gamma(a) * nk, ea * pm));
      gaction.add(max_abs_diff(g.gamma(b) * nk, -kI * k * pm));
      gaction.add(max_abs_diff(g.gamma(a) * pk, nm));
      gaction.add(max_abs_diff(g.gamma(b) * pk, -kI * k * ea * nm));
    }
  }

  Tally& trans = family("stildestrans");
  for (const auto& p : g.cartan_pairs())
    for (const auto& q : g.cartan_pairs()) {
      if (p == q) continue;
      const int a = p.a, b = p.b, c = q.a, d = q.b;
      const Matrix sac = s_ab(g, a, c);
      const double ea = g.eta(a), ec = g.eta(c);
      for (Complex k1 : allowed_k(g, a, b))
        for (Complex k2 : allowed_k(g, c, d)) {
          const Matrix n1 = nilpotent(g, a, b, k1), n2 = nilpotent(g, c, d, k2);
          const Matrix p1 = projector(g, a, b, k1), p2 = projector(g, c, d, k2);
          const Matrix n1m = nilpotent(g, a, b, -k1), n2m = nilpotent(g, c, d, -k2);
          const Matrix p1m = projector(g, a, b, -k1), p2m = projector(g, c, d, -k2);
          trans.add(max_abs_diff(sac * n1 * n2, -0.5 * kI * ea * ec * p1m * p2m));
          trans.add(max_abs_diff(sac * p1 * p2, 0.5 * kI * n1m * n2m));
          trans.add(max_abs_diff(sac * n1 * p2, -0.5 * kI * ea * p1m * n2m));
          trans.add(max_abs_diff(sac * p1 * n2, 0.5 * kI * ec * n1m * p2m));
        }
    }

  Tally& basis = family("weyl_basis");
  const auto states = weyl_basis(g);
  const int expected = 1 << (g.d() / 2 - 1);
  basis.add(static_cast<int>(states.size()) == expected ? 0.0 : 1.0);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& st = states[i];
    basis.add(std::abs(st.vec.norm() - 1.0));
    basis.add((g.handedness() * st.vec - double(st.handedness) * st.vec).norm());
    basis.add(st.handedness == states.front().handedness ? 0.0 : 1.0);
    for (const auto& tag : st.tags) {
      const Matrix s = s_ab(g, tag.pair.a, tag.pair.b);
      basis.add((s * st.vec - tag.eigenvalue() * st.vec).norm());
    }
    for (std::size_t j = 0; j < i; ++j) basis.add(std::abs(states[j].vec.dot(st.vec)));
  }

  std::vector<FamilyCheck> out;
  for (auto& x : t) {
    if (x.fc.checks == 0) continue;  // needs two Cartan pairs, absent in d=2
    x.fc.pass = x.fc.max_error <= tol;
    out.push_back(x.fc);
  }
  return out;
}

}  // namespace spinor_disc::clifford
