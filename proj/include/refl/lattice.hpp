#pragma once

// Even positive-definite lattices given by integral Gram matrices, their
// duals and discriminant groups, and exact short-vector enumeration.
//
// Conventions used throughout:
//  * coordinates of a vector are taken in the basis of L, so L itself is Z^r
//    and L^dual is G^{-1} Z^r;
//  * the pairing vector of l is (l, e_i)_i = G * coords, an integer vector
//    exactly when l lies in the dual lattice;
//  * discriminant-form norms are stored with the sign they have in the
//    positive-definite L. Classes written with norm -q (mod 2) in A_{L(-1)}
//    are stored here with norm +q (mod 2).

#include "refl/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace refl {

class IntegerLattice {
 public:
  /// The rank-0 lattice.
  IntegerLattice();
  /// Throws std::invalid_argument unless gram is square, symmetric, even and
  /// positive definite.
  explicit IntegerLattice(IntMatrix gram, std::string label = {});

  Eigen::Index rank() const { return data_->gram.rows(); }
  const IntMatrix& gram() const { return data_->gram; }
  const std::string& label() const { return data_->label; }
  const Integer& determinant() const { return data_->det; }
  const RationalMatrix& inverse_gram() const { return data_->inverse; }
  /// Pivots and multipliers of the Gram matrix, see quadratic_decomposition.
  const RationalMatrix& decomposition() const { return data_->decomposition; }
  const RationalMatrix& dual_decomposition() const { return data_->dual_decomposition; }

  /// (l, l) for the dual vector whose pairing vector is `pairing`.
  Rational norm_from_pairing(const IntVector& pairing) const;
  Rational inner_from_pairing(const IntVector& a, const IntVector& b) const;
  RationalVector coords_from_pairing(const IntVector& pairing) const;
  /// True when the dual vector with this pairing vector lies in L.
  bool contains_pairing(const IntVector& pairing) const;

  IntegerLattice with_label(std::string label) const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) { return a.gram() == b.gram(); }

 private:
  struct Data {
    IntMatrix gram;
    std::string label;
    Integer det;
    RationalMatrix inverse;
    IntMatrix adjugate;  // det * inverse, exact integers
    RationalMatrix decomposition;
    RationalMatrix dual_decomposition;
  };
  std::shared_ptr<const Data> data_;
};

/// An element of L^dual with exact coordinates and norm.
class DualVector {
 public:
  DualVector() = default;

  /// Throws std::invalid_argument when gram * coords is not integral.
  static DualVector from_coords(const IntegerLattice& lattice, const RationalVector& coords);
  static DualVector from_pairing(const IntegerLattice& lattice, const IntVector& pairing);
  static DualVector zero(const IntegerLattice& lattice);

  const RationalVector& coords() const { return coords_; }
  const IntVector& pairing() const { return pairing_; }
  const Rational& norm() const { return norm_; }
  Eigen::Index size() const { return coords_.size(); }
  bool is_zero() const;
  /// True when every coordinate is an integer, i.e. the vector lies in L.
  bool in_lattice() const;

  DualVector operator-() const;

  friend bool operator==(const DualVector& a, const DualVector& b) { return a.pairing_ == b.pairing_; }
  /// Lexicographic on coordinates.
  friend bool operator<(const DualVector& a, const DualVector& b);

 private:
  RationalVector coords_;
  IntVector pairing_;
  Rational norm_;
};

/// A class of the discriminant group L^dual / L, keyed by its canonical
/// representative whose coordinates all lie in [0, 1).
struct CosetClass {
  DualVector representative;
  std::int64_t order = 1;
  Rational norm_mod_2;

  bool is_trivial() const { return order == 1; }
  friend bool operator==(const CosetClass& a, const CosetClass& b) { return a.representative == b.representative; }
  friend bool operator<(const CosetClass& a, const CosetClass& b) { return a.representative < b.representative; }
};

enum class LatticeFamily { A, D, E8, A1scaled, rank1 };

/// Root lattices and their rescalings L(m) (Gram matrix multiplied by m).
///   A, n >= 1      Cartan matrix of A_n
///   D, n >= 4      Cartan matrix of D_n, simple roots e_i - e_{i+1}, e_{n-1} + e_n
///   E8             Cartan matrix of E_8 (n ignored)
///   A1scaled       n orthogonal copies of <2>, i.e. nA_1
///   rank1          the rank-one lattice <2n>
IntegerLattice build_named(LatticeFamily family, int n, int m = 1);
IntegerLattice direct_sum(const IntegerLattice& a, const IntegerLattice& b);
IntegerLattice rescale(const IntegerLattice& lattice, int m);

struct DetLevel {
  Integer det;
  std::int64_t level = 1;
};
DetLevel det_and_level(const IntegerLattice& lattice);

/// Canonical class of a dual vector.
CosetClass coset_of(const IntegerLattice& lattice, const DualVector& v);
CosetClass trivial_coset(const IntegerLattice& lattice);
/// Every class of L^dual / L, sorted by canonical representative.
std::vector<CosetClass> discriminant_group(const IntegerLattice& lattice);

/// All v in L + coset.representative with (v, v) == norm, sorted lexicographically.
std::vector<DualVector> enumerate_vectors(const IntegerLattice& lattice, const CosetClass& coset,
                                          const Rational& norm);
/// |{ v in L + coset.representative : (v, v) == norm }| without building the vectors.
std::int64_t count_vectors(const IntegerLattice& lattice, const CosetClass& coset, const Rational& norm);
/// All v in L + offset with (v, v) <= bound, sorted lexicographically.
/// `offset` must be a dual vector.
std::vector<DualVector> enumerate_vectors_up_to(const IntegerLattice& lattice, const DualVector& offset,
                                                const Rational& bound);
/// All nonzero v in L^dual with (v, v) <= bound, sorted lexicographically.
std::vector<DualVector> enumerate_dual_up_to(const IntegerLattice& lattice, const Rational& bound);
/// The nonzero dual vectors of smallest norm.
std::vector<DualVector> minimal_dual_vectors(const IntegerLattice& lattice);

/// |{ r in L : (r, r) = 2 }|
std::int64_t count_roots(const IntegerLattice& lattice);
/// |{ s in L^dual : 2s in R(L), s - mu0_half in L }|.
/// Throws std::invalid_argument unless 2 * mu0_half has integral coordinates.
std::int64_t count_R_mu(const IntegerLattice& lattice, const RationalVector& mu0_half);
/// |{ s in L^dual : (s, s) = 2/p, s - gamma in L }|
std::int64_t count_C_gamma(const IntegerLattice& lattice, const CosetClass& gamma, int p);

struct ReflectiveKind {
  enum class Type { two_reflective, prime_level };
  Type type = Type::two_reflective;
  int p = 0;

  static ReflectiveKind two_reflective() { return {Type::two_reflective, 0}; }
  static ReflectiveKind prime_level(int p);

  /// Hyperbolic norm 2n - (l,l) of the singular layer carried by the classes.
  Rational singular_discriminant() const;
  /// Target class norm on the L side: 1/2 or 2/p.
  Rational class_norm() const;
  std::string name() const;

  friend bool operator==(const ReflectiveKind&, const ReflectiveKind&) = default;
};

/// two_reflective: classes of order 2 with norm 1/2 mod 2.
/// prime_level(p): classes with norm 2/p mod 2.
std::vector<CosetClass> reflective_classes(const IntegerLattice& lattice, const ReflectiveKind& kind);

bool is_prime(long p);

struct ReflectiveVectorReport {
  IntVector vector;
  Rational norm;
  std::int64_t div = 0;
  bool is_reflective = false;
};

/// Reflectivity of a primitive vector of negative norm -2d in an ambient
/// (possibly indefinite) even lattice: reflective iff div(v) is d or 2d.
ReflectiveVectorReport reflection_check(const IntVector& v, const IntMatrix& ambient_gram, const Rational& norm);

}  // namespace refl
