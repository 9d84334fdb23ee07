#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace spinor_disc::clifford {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A Cartan generator S^{ab}, a < b in label order.
struct CartanPair {
  int a;
  int b;
  bool operator==(const CartanPair&) const = default;
};

/// Gamma matrices for even d with signature diag(1, -1, ..., -1).
///
/// Index labels follow the usual d = (1+5) naming, which skips 4:
///   d = 2: {0, 1}            Cartan S^01
///   d = 4: {0, 1, 2, 3}      Cartan S^03, S^12
///   d >= 6: {0, 1, 2, 3, 5, 6, ..., d}  Cartan S^03, S^12, S^56, S^78, ...
/// Each Cartan pair acts on its own two-dimensional tensor factor
/// (Jordan-Wigner strings of sigma_z), so all entries are 0, +-1, +-i.
class GammaSet {
 public:
  static GammaSet build(int d);

  int d() const noexcept { return d_; }
  int dim() const noexcept { return static_cast<int>(identity_.rows()); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::vector<CartanPair>& cartan_pairs() const noexcept { return cartan_; }
  bool has_label(int label) const;
  double eta(int label) const;
  const Matrix& gamma(int label) const;
  const Matrix& identity() const noexcept { return identity_; }
  /// Gamma = i^{d/2} prod_a sqrt(eta^aa) gamma^a, ascending labels.
  const Matrix& handedness() const noexcept { return handedness_; }

 private:
  int d_ = 0;
  std::vector<int> labels_;
  std::vector<CartanPair> cartan_;
  std::vector<Matrix> gammas_;
  Matrix identity_;
  Matrix handedness_;
  int position(int label) const;
};

/// S^ab = (i/4)(gamma^a gamma^b - gamma^b gamma^a). a == b throws DomainError.
Matrix s_ab(const GammaSet& g, int a, int b);

/// Nilpotent (ab)(k) = (gamma^a + eta^aa/(i k) gamma^b) / 2, with k^2 = eta^aa eta^bb.
Matrix nilpotent(const GammaSet& g, int a, int b, Complex k);
/// Projector [ab][k] = (1 + (i/k) gamma^a gamma^b) / 2.
Matrix projector(const GammaSet& g, int a, int b, Complex k);

/// Allowed k values (+- sqrt(eta^aa eta^bb)) for a pair.
std::vector<Complex> allowed_k(const GammaSet& g, int a, int b);

enum class FactorKind { Nilpotent, Projector };

struct FactorTag {
  CartanPair pair;
  FactorKind kind;
  Complex k;
  /// S^{ab} eigenvalue carried by this factor.
  Complex eigenvalue() const { return 0.5 * k; }
  /// e.g. "(56)(+)" or "[03][-i]"
  std::string str() const;
};

struct BasisState {
  std::vector<FactorTag> tags;  // product order, leftmost applied last
  Vector vec;
  int handedness = 0;
  std::string name;
  std::string str() const;
};

/// Vacuum psi_0: unit vector fixed by [ab][-k_ab] for every factor of the
/// starting all-nilpotent state, phase chosen so its largest entry is real positive.
Vector vacuum(const GammaSet& g);

/// Matrix product of the tagged factors applied to the vacuum.
Vector apply_tags(const GammaSet& g, const std::vector<FactorTag>& tags);

/// One Weyl representation: 2^{d/2-1} states of common handedness, obtained from
/// the all-nilpotent starting state by turning pairs (k)(k') into [-k][-k'].
/// For d = 6 these are phi^1_1, phi^1_2, phi^2_1, phi^2_2 in that order.
std::vector<BasisState> weyl_basis(const GammaSet& g);

/// N^{upper}_{lower} built from nilpotents of the 03 and 12 pairs (d >= 4).
Matrix ladder_n(const GammaSet& g, int upper_sign, int lower_sign);

/// Eigenvalue of M^56 = -i d/dphi + S^56 on spin_state * e^{i angular_power phi}.
/// Throws DomainError if spin_state has no definite S^56.
double m56_eigenvalue(const GammaSet& g, const Vector& spin_state, int angular_power);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

struct FamilyCheck {
  std::string family;
  int checks = 0;
  double max_error = 0.0;
  bool pass = false;
};

/// Runs every algebraic identity family on the gamma set. Entrywise tolerance 1e-14.
std::vector<FamilyCheck> check_identities(const GammaSet& g, double tol = 1e-14);

}  // namespace spinor_disc::clifford
