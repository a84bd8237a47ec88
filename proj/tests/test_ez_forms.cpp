#include "refl/ez_forms.hpp"

#include <gtest/gtest.h>

namespace refl {
namespace {

using Poly = std::map<std::pair<int, int>, Rational>;  // (q, zeta) -> coefficient

Poly multiply(const Poly& a, const Poly& b, int N) {
  Poly out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b)
      if (ka.first + kb.first < N) out[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// (zeta - 2 + zeta^-1) prod (1 - q^n zeta)^2 (1 - q^n zeta^-1)^2 / (1 - q^n)^4
Poly phi_m2_1_product(int N) {
  Poly p{{{0, 1}, 1}, {{0, 0}, -2}, {{0, -1}, 1}};
  for (int n = 1; n < N; ++n) {
    const Poly plus{{{0, 0}, 1}, {{n, 1}, -1}};
    const Poly minus{{{0, 0}, 1}, {{n, -1}, -1}};
    Poly geometric;
    for (int k = 0; k * n < N; ++k) geometric[{k * n, 0}] = 1;
    for (int i = 0; i < 2; ++i) p = multiply(multiply(p, plus, N), minus, N);
    for (int i = 0; i < 4; ++i) p = multiply(p, geometric, N);
  }
  return p;
}

IntVector z(int j) { return IntVector::Constant(1, j); }

TEST(EzForms, PhiM21MatchesProductFormula) {
  const int N = 5;
  const JacobiExpansion phi = ez_generator(EzGenerator::phi_m2_1, N);
  const Poly oracle = phi_m2_1_product(N);
  EXPECT_EQ(phi.size(), oracle.size());
  for (const auto& [k, v] : oracle) EXPECT_EQ(phi.coefficient(k.first, z(k.second)), v) << k.first << "," << k.second;
  EXPECT_EQ(phi.weight(), -2);
}

TEST(EzForms, PhiM21FirstLayer) {
  const JacobiExpansion phi = ez_generator(EzGenerator::phi_m2_1, 2);
  const long expected[] = {-2, 8, -12, 8, -2};
  for (int j = -2; j <= 2; ++j) EXPECT_EQ(phi.coefficient(1, z(j)), expected[j + 2]);
}

TEST(EzForms, Phi01FromHeatOperator) {
  const int N = 4;
  const JacobiExpansion phim2 = ez_generator(EzGenerator::phi_m2_1, N);
  const JacobiExpansion via_heat = Rational(-24) * heat_Hk(phim2, -2);
  EXPECT_EQ(via_heat, ez_generator(EzGenerator::phi_0_1, N));
}

TEST(EzForms, Phi01Layers) {
  const JacobiExpansion phi = ez_generator(EzGenerator::phi_0_1, 3);
  EXPECT_EQ(phi.coefficient(0, z(1)), 1);
  EXPECT_EQ(phi.coefficient(0, z(0)), 10);
  EXPECT_EQ(phi.coefficient(1, z(2)), 10);
  EXPECT_EQ(phi.coefficient(1, z(1)), -64);
  EXPECT_EQ(phi.coefficient(1, z(0)), 108);
  EXPECT_EQ(gritsenko_residual(phi), 0);
  EXPECT_EQ(classify(phi), HolomorphyClass::weak);
}

TEST(EzForms, E41) {
  const JacobiExpansion e = ez_generator(EzGenerator::E_4_1, 3);
  EXPECT_EQ(e.weight(), 4);
  EXPECT_EQ(classify(e), HolomorphyClass::holomorphic);
  EXPECT_EQ(e.coefficient(0, z(0)), 1);
  EXPECT_EQ(e.coefficient(1, z(0)), 126);
  EXPECT_EQ(e.coefficient(1, z(1)), 56);
  EXPECT_EQ(e.coefficient(1, z(-1)), 56);
  EXPECT_EQ(e.coefficient(1, z(2)), 1);
  EXPECT_EQ(e.coefficient(1, z(3)), 0);
  // E_{4,1}(tau, 0) = E4 + ... has q^1 coefficient 126 + 112 + 2 = 240
  EXPECT_EQ(specialize_zero(e)[1], 240);
}

TEST(EzForms, StructuralInvariants) {
  for (EzGenerator g : {EzGenerator::phi_0_1, EzGenerator::phi_m2_1, EzGenerator::E_4_1}) {
    const JacobiExpansion phi = ez_generator(g, 4);
    EXPECT_TRUE(elliptic_invariance_violations(phi).empty()) << to_string(g);
    EXPECT_TRUE(parity_violations(phi).empty()) << to_string(g);
  }
}

TEST(EzForms, RejectsShortTruncation) { EXPECT_THROW(ez_generator(EzGenerator::phi_0_1, 1), std::invalid_argument); }

TEST(WeakBasis, ReproducesPhi01) {
  EXPECT_EQ(solve_weak_basis(1, 0, {{1, 1}, {0, 10}}, 3), ez_generator(EzGenerator::phi_0_1, 3));
}

TEST(WeakBasis, IndexFive) {
  const JacobiExpansion psi = solve_weak_basis(5, 0, {{1, 5}, {0, 2}}, 2);
  EXPECT_EQ(psi.coefficient(0, z(1)), 5);
  EXPECT_EQ(psi.coefficient(0, z(0)), 2);
  EXPECT_EQ(psi.coefficient(0, z(2)), 0);
  EXPECT_EQ(psi.coefficient(1, z(5)), -1);
  EXPECT_EQ(gritsenko_residual(psi), 0);
  EXPECT_TRUE(elliptic_invariance_violations(psi).empty());
}

TEST(WeakBasis, IndexTwoIsIntegral) {
  const JacobiExpansion psi = solve_weak_basis(2, 0, {{1, 1}, {0, 4}}, 4);
  for (const auto& [key, c] : psi.terms()) EXPECT_TRUE(is_integer(c));
  EXPECT_EQ(gritsenko_residual(psi), 0);
}

TEST(WeakBasis, ReportsFailuresDistinctly) {
  // weight 0, index 1: only phi01, so zeta + 3 + zeta^-1 is not reachable
  EXPECT_THROW(solve_weak_basis(1, 0, {{1, 1}, {0, 3}}, 2), NoSolution);
  // weight 12 index 1 contains phi01 * E4^3, phi01 * E6^2, phim21 * E4^2 E6, ...
  try {
    solve_weak_basis(1, 12, {{0, 1}}, 2);
    FAIL() << "expected NonUnique";
  } catch (const NonUnique& e) {
    EXPECT_GT(e.dimension, 0);
  }
  // weight 2 index 1 is spanned by phim21 * E4, whose q^0 layer has zeta terms
  EXPECT_THROW(solve_weak_basis(1, 2, {{0, 1}}, 2), NoSolution);
}

}  // namespace
}  // namespace refl
