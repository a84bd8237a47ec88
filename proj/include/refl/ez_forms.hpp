#pragma once

// Weak Jacobi forms of index A1(m): the generators phi_{-2,1}, phi_{0,1},
// the Jacobi-Eisenstein series E_{4,1}, and exact solving in the ring they
// generate over M_*(SL2(Z)).
//
// In index A1(m) the classical variable zeta^j corresponds to the dual
// vector with pairing vector (j), of norm j^2 / (2m).

#include "refl/jacobi.hpp"

#include <map>
#include <stdexcept>

namespace refl {

enum class EzGenerator { phi_0_1, phi_m2_1, E_4_1 };
std::string to_string(EzGenerator g);

/// Expansion to q^{N-1}. Requires N >= 2. Throws std::logic_error if the
/// constructed q^0 layer is not the expected one.
JacobiExpansion ez_generator(EzGenerator g, int N);

class WeakBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NoSolution : public WeakBasisError {
 public:
  NoSolution() : WeakBasisError("no form in the span matches the q^0 target") {}
};
class NonUnique : public WeakBasisError {
 public:
  explicit NonUnique(int dimension)
      : WeakBasisError("the q^0 target leaves a " + std::to_string(dimension) + "-dimensional solution space"),
        dimension(dimension) {}
  int dimension;
};

/// The form in span{ phi01^a phim21^b E4^c E6^d : a + b = m, -2b + 4c + 6d = weight }
/// whose q^0 layer is sum_j t_j (zeta^j + zeta^-j) (t_0 counted once),
/// where t_j = q0_target[j] for j >= 0 and missing entries are 0.
JacobiExpansion solve_weak_basis(int m, int weight, const std::map<int, Rational>& q0_target, int N);

}  // namespace refl
