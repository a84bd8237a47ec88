#pragma once

// Divisor data of weight-0 Borcherds inputs, the weight formulas for
// 2-reflective and prime-level reflective forms, and the exact constants of
// the differential-operator chains that bound the rank.

#include "refl/jacobi.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace refl {

struct DivisorData {
  ReflectiveKind kind;
  Integer beta0;
  /// beta_mu (2-reflective) or beta_gamma (prime level), one entry per class
  /// returned by reflective_classes.
  std::map<CosetClass, Integer> beta;
};

class DivisorError : public std::runtime_error {
 public:
  enum class Reason { non_holomorphic_product, non_constant_orbit, unexpected_singular_term, non_integral, trivial };
  DivisorError(Reason reason, const std::string& what) : std::runtime_error(what), reason(reason) {}
  Reason reason;
};

/// Reads beta_0 and the class multiplicities off the singular terms of a
/// weight-0 input with pole order <= 1, checking that every orbit inside the
/// window carries one constant coefficient.
DivisorData derive_divisor(const JacobiExpansion& phi, const ReflectiveKind& kind);

Rational weight_two_reflective(const IntegerLattice& lattice, const DivisorData& divisor);
Rational weight_prime_level(const IntegerLattice& lattice, int p, const DivisorData& divisor);

struct ClassificationConstants {
  int n0;
  Rational a, d, beta0;
  Rational c1, c2, c3, d1, d2, d3, u;
};

/// Throws std::domain_error at n0 = 24, 28, 32.
ClassificationConstants chain_constants(int n0, const Rational& a, const Rational& d, const Rational& beta0);

/// u = A d + B beta0.
struct LinearForm {
  Rational A, B;
};
LinearForm u_coefficients(int n0, const Rational& a);
/// True when u != 0 for every d >= n0 and beta0 >= 1.
bool u_nonvanishing(int n0, const Rational& a);

/// d / beta0 solving d2 = d + 240 beta0, present only when c2 = 1.
std::optional<Rational> solve_g_vanishing(int n0, const Rational& a);

enum class CompleteDivisorVerdict { possible, impossible, forced_unimodular_16 };
std::string to_string(CompleteDivisorVerdict v);

struct CompleteDivisorReport {
  Rational g0, h0;
  CompleteDivisorVerdict verdict;
};
/// Requires 1 <= n0 <= 23.
CompleteDivisorReport complete_divisor_case(int n0, long R);

/// weight < n0 / 2
bool singular_weight_vanishes(const Rational& weight, int n0);

/// 8 + 24 / (p + 1)
Rational riemann_roch_rank_bound(int p);
/// -1 <= p nu0 + nu_inf <= (4 - n0/2)(p + 1)/12
bool rr_inequality(long nu0, long nu_inf, int n0, int p);

/// Smallest |R(L)| compatible with weight k_over_beta0 * beta0.
/// Throws std::domain_error when 12/(p n0) - 1/2 > 0 or no bound exists.
long min_root_bound(int n0, int p, const Rational& k_over_beta0);

struct TnReport {
  int n;
  std::int64_t roots;
  std::int64_t class_vectors;  // sum of |R_mu| over the 2-reflective classes
  Rational formula_weight_per_beta0;  // the beta_0 part of the weight
  Rational class_coefficient;         // (3/17 - 1/2) * sum |R_mu|
  Rational required_weight_per_beta0;
  std::optional<Rational> beta_difference;  // (beta_mu - beta_0)/beta_0 reaching the requirement
  bool obstructed;
};
TnReport check_Tn(int n);

struct ClassificationRow {
  std::string ranks;
  std::string weight;
  std::string status;  // "derived", "documented" or "undetermined"
  std::string computation;
};
std::vector<ClassificationRow> rank_classification(const ReflectiveKind& kind);

}  // namespace refl
