#pragma once

// Modular forms vanishing exactly on the diagonal divisor: the weight forced
// by the q^0 identity, and the resulting classification for nA1(m), An(m)
// and Dn(m).

#include "refl/jacobi.hpp"

#include <optional>
#include <string>
#include <vector>

namespace refl {

enum class DdFamily { nA1, An, Dn };
std::string to_string(DdFamily f);

/// Which dual vectors make up the diagonal divisor of An(m) / Dn(m):
/// all minimal vectors of the dual lattice, or only those in the classes of
/// +-omega_1 (the e_i-type vectors of Dn).
enum class DdConvention { full_orbit, e_type };
std::string to_string(DdConvention c);

struct DdCandidate {
  DdFamily family;
  int n;
  int m;
  int c;
  Rational k;
  int rank;
  std::size_t orbit_size;
  Rational orbit_norm;
  bool admissible;
  std::optional<std::string> exclusion_reason;
};

/// k = (1/2) [ (12/rank) c sum_{s in S} (s,s) - c |S| ]
Rational dd_weight(const IntegerLattice& lattice, const std::vector<DualVector>& S, int c);

/// The vectors defining the diagonal divisor of base(m), as dual vectors of
/// rescale(base, m). Both sets are found on `base` and carried over; their
/// pairing vectors do not change under rescaling.
std::vector<DualVector> diagonal_vectors(const IntegerLattice& base, int m, DdConvention convention);

/// All (n, m) with nm <= 5; larger nm forces k <= 0. c is the smallest
/// multiplicity in 1..c_max making 2k integral. (n, m) = (1, 5) is left
/// inadmissible pending exclude_m5.
std::vector<DdCandidate> enumerate_nA1(int c_max = 5);

/// An(m), 2 <= n <= 10, and Dn(m), 4 <= n <= 10, with m <= 6.
std::vector<DdCandidate> enumerate_AnDn(DdConvention convention = DdConvention::full_orbit);

struct M5Exclusion {
  JacobiExpansion psi;
  Rational q0_zeta1, q0_zeta0;
  Rational q1_zeta5;
  std::vector<SingularTerm> negative_singular_terms;
  bool excluded;
  std::string verdict;
};
/// Builds the weak form 5 zeta^{+-1} + 2 + O(q) of index A1(5) and reads off
/// its negative singular coefficient.
M5Exclusion exclude_m5(int N = 2);

struct CounterpartCheck {
  int m;
  Rational k;
  Rational min_singular_coefficient;
  bool nonnegative;
};
/// The index-A1(m) inputs c zeta^{+-1} + 2k + O(q), c = 1, for m = 1..4.
std::vector<CounterpartCheck> dd_counterparts(int N = 3);

}  // namespace refl
