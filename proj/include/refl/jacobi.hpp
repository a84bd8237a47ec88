#pragma once

// Truncated Fourier expansions  sum f(n, l) q^n zeta^l  of Jacobi forms of
// lattice index, with exact rational coefficients.
//
// A dual vector l is stored through its pairing vector (l, e_i)_i, which is
// integral and canonical; coordinates and norms are recovered from the index
// lattice on demand.

#include "refl/lattice.hpp"
#include "refl/qseries.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace refl {

struct FourierKey {
  int n = 0;
  std::vector<std::int64_t> l;  // pairing vector

  auto operator<=>(const FourierKey&) const = default;
};

enum class HolomorphyClass { weakly_holomorphic, weak, holomorphic };
std::string to_string(HolomorphyClass c);

class JacobiExpansion {
 public:
  using Terms = std::map<FourierKey, Rational>;

  /// The zero expansion with coefficients known for valuation <= n < trunc.
  /// Weight may be half-integral when the index has odd rank.
  JacobiExpansion(IntegerLattice index, Rational weight, int valuation, int trunc);
  /// A scalar q-series seen as a Jacobi form of rank-0 index.
  static JacobiExpansion from_scalar(const QSeries& f);

  const IntegerLattice& index() const { return index_; }
  Eigen::Index rank() const { return index_.rank(); }
  const Rational& weight() const { return weight_; }
  int valuation() const { return valuation_; }
  int pole_order() const { return valuation_ < 0 ? -valuation_ : 0; }
  int trunc() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool in_window(int n) const { return n >= valuation_ && n < trunc_; }
  /// Throws std::out_of_range when n >= trunc.
  Rational coefficient(int n, const IntVector& pairing) const;
  Rational coefficient(const FourierKey& key) const;
  /// Accumulates into f(n, l); zero results are dropped.
  void add(int n, const IntVector& pairing, const Rational& c);
  void add(const FourierKey& key, const Rational& c);

  DualVector dual_vector(const FourierKey& key) const;
  Rational norm(const FourierKey& key) const;
  /// 2n - (l, l)
  Rational hyperbolic_norm(const FourierKey& key) const;

  JacobiExpansion truncated(int trunc) const;
  JacobiExpansion with_weight(const Rational& weight) const;

  friend JacobiExpansion operator+(const JacobiExpansion& a, const JacobiExpansion& b);
  friend JacobiExpansion operator-(const JacobiExpansion& a, const JacobiExpansion& b);
  friend JacobiExpansion operator*(const Rational& s, const JacobiExpansion& f);
  friend bool operator==(const JacobiExpansion& a, const JacobiExpansion& b);

 private:
  IntegerLattice index_;
  Rational weight_;
  int valuation_;
  int trunc_;
  Terms terms_;
};

FourierKey make_key(int n, const IntVector& pairing);
IntVector pairing_of(const FourierKey& key);

/// sum_{v in L} q^{(v,v)/2} zeta^v for exponents < N; weight rank/2.
JacobiExpansion theta_series(const IntegerLattice& lattice, int N);

/// phi * f for a scalar series f; the weight grows by the weight tag of f.
JacobiExpansion mul_scalar(const JacobiExpansion& phi, const QSeries& f);
/// phi1 (x) phi2 over the orthogonal sum of the index lattices.
JacobiExpansion tensor(const JacobiExpansion& a, const JacobiExpansion& b);
/// Pointwise product in the same elliptic variable: both indices live on the
/// same Z^r and the result has Gram matrix G_a + G_b.
JacobiExpansion product(const JacobiExpansion& a, const JacobiExpansion& b);

/// (1/2) [2n - (l,l)] f(n, l)
JacobiExpansion heat_H(const JacobiExpansion& phi);
/// H(phi) + (2k - rank) G2 phi, of weight k + 2. k must equal phi's weight.
JacobiExpansion heat_Hk(const JacobiExpansion& phi, const Rational& k);

/// sum c(0,l) - 12/rank sum c(0,l)(l,l) - 24 a, where a is the q^{-1}
/// coefficient. Requires weight 0, pole order <= 1 and a q^{-1} layer
/// supported at l = 0 only.
Rational gritsenko_residual(const JacobiExpansion& phi);

struct SingularTerm {
  int n;
  DualVector l;
  Rational hyperbolic_norm;
  Rational coefficient;
};
/// Stored terms with 2n - (l,l) < 0, ordered by (n, coordinates).
std::vector<SingularTerm> singular_part(const JacobiExpansion& phi);
HolomorphyClass classify(const JacobiExpansion& phi);

/// The q-series phi(tau, 0).
QSeries specialize_zero(const JacobiExpansion& phi);

/// Points where f(n, l) != f(n + (l,x) + (x,x)/2, l + x) for a basis
/// translation x and both indices inside the window. Empty when invariant.
std::vector<std::string> elliptic_invariance_violations(const JacobiExpansion& phi);
/// Points where f(n, -l) != (-1)^k f(n, l); only defined for integral weight.
std::vector<std::string> parity_violations(const JacobiExpansion& phi);

/// One line per term: "n<TAB>c_1,...,c_r<TAB>num/den", sorted by n and then
/// lexicographically by coordinates. Preceded by '#' metadata lines.
void write_text(std::ostream& out, const JacobiExpansion& phi);
std::string to_text(const JacobiExpansion& phi);
/// Inverse of write_text; the index lattice must be supplied.
JacobiExpansion read_text(std::istream& in, const IntegerLattice& index);

}  // namespace refl
