#include "refl/jacobi.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace refl {
namespace {

IntegerLattice E8() { return build_named(LatticeFamily::E8, 0); }
IntegerLattice A1(int m = 1) { return build_named(LatticeFamily::A1scaled, 1, m); }

IntVector pv(std::initializer_list<std::int64_t> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

// q^0 layer of phi_{0,1}: zeta + 10 + zeta^{-1}.
JacobiExpansion phi01_q0(const Rational& centre = 10) {
  JacobiExpansion phi(A1(), 0, 0, 1);
  phi.add(0, pv({1}), 1);
  phi.add(0, pv({0}), centre);
  phi.add(0, pv({-1}), 1);
  return phi;
}

TEST(Theta, E8Layers) {
  const JacobiExpansion t = theta_series(E8(), 2);
  EXPECT_EQ(t.weight(), 4);
  EXPECT_EQ(t.coefficient(0, IntVector::Zero(8)), 1);
  int layer1 = 0;
  for (const auto& [key, c] : t.terms()) {
    if (key.n == 1) {
      ++layer1;
      EXPECT_EQ(c, 1);
      EXPECT_EQ(t.norm(key), 2);
    }
  }
  EXPECT_EQ(layer1, 240);
}

TEST(Theta, E8AtZeroIsE4) {
  const QSeries s = specialize_zero(theta_series(E8(), 3));
  const QSeries e4 = eisenstein(EisensteinKind::E4, 3);
  for (int n = 0; n < 3; ++n) EXPECT_EQ(s[n], e4[n]) << n;
}

TEST(Theta, RankZeroIsOne) {
  const JacobiExpansion t = theta_series(IntegerLattice(), 3);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t.coefficient(0, IntVector(0)), 1);
}

TEST(Theta, AlwaysHolomorphic) {
  for (const IntegerLattice& l :
       {E8(), A1(), A1(3), build_named(LatticeFamily::A, 2, 3), build_named(LatticeFamily::D, 4),
        build_named(LatticeFamily::rank1, 5)}) {
    const JacobiExpansion t = theta_series(l, 3);
    EXPECT_EQ(classify(t), HolomorphyClass::holomorphic) << l.label();
    EXPECT_TRUE(singular_part(t).empty());
  }
}

TEST(Tensor, ThetaOfSumLattice) {
  const JacobiExpansion a = theta_series(E8(), 2);
  const JacobiExpansion prod = tensor(a, a);
  const JacobiExpansion direct = theta_series(direct_sum(E8(), E8()), 2);
  EXPECT_EQ(prod.size(), 481u);
  EXPECT_EQ(prod, direct);
}

TEST(Tensor, UnitIsNeutral) {
  const JacobiExpansion phi = theta_series(build_named(LatticeFamily::A, 2), 3);
  const JacobiExpansion one = theta_series(IntegerLattice(), 5);
  EXPECT_EQ(tensor(phi, one), phi);
}

TEST(Tensor, HyperbolicNormsAdd) {
  const JacobiExpansion a = phi01_q0();
  const JacobiExpansion b = theta_series(A1(2), 1);
  const JacobiExpansion p = tensor(a, b);
  for (const auto& [key, c] : p.terms()) {
    FourierKey ka{0, {key.l[0]}}, kb{0, {key.l[1]}};
    EXPECT_EQ(p.hyperbolic_norm(key), a.hyperbolic_norm(ka) + b.hyperbolic_norm(kb));
  }
}

TEST(MulScalar, OneIsNeutral) {
  const JacobiExpansion phi = theta_series(A1(), 3);
  QSeries one(0, 10, 0);
  one.set(0, 1);
  EXPECT_EQ(mul_scalar(phi, one), phi);
}

TEST(MulScalar, DeltaKillsPole) {
  JacobiExpansion phi = JacobiExpansion::from_scalar(delta(4, true));
  EXPECT_EQ(phi.pole_order(), 1);
  const JacobiExpansion one = mul_scalar(phi, delta(5));
  EXPECT_EQ(one.pole_order(), 0);
  EXPECT_EQ(one.weight(), 0);
  EXPECT_EQ(one.coefficient(0, IntVector(0)), 1);
  EXPECT_EQ(one.coefficient(1, IntVector(0)), 0);
}

TEST(MulScalar, UnitSeriesKeepsQ0) {
  const JacobiExpansion phi = mul_scalar(phi01_q0(), eisenstein(EisensteinKind::E4, 4));
  EXPECT_EQ(phi.weight(), 4);
  EXPECT_EQ(phi.trunc(), 1);
  EXPECT_EQ(phi, 1 * phi01_q0().with_weight(4));
}

TEST(MulScalar, RequiresWeightTag) {
  QSeries f(0, 3);
  EXPECT_THROW(mul_scalar(phi01_q0(), f), std::invalid_argument);
}

TEST(MulScalar, RejectsEmptyResult) {
  QSeries f(0, 5, 12);
  f.set(0, 1);
  JacobiExpansion phi(A1(), 0, -2, 0);
  EXPECT_THROW(mul_scalar(phi, f), std::domain_error);
}

TEST(Heat, SingleRootTerm) {
  JacobiExpansion phi(A1(), 0, 0, 1);
  phi.add(0, pv({2}), 1);
  EXPECT_EQ(heat_H(phi).coefficient(0, pv({2})), -1);
}

TEST(Heat, LeibnizOnThetaTensor) {
  const JacobiExpansion a = theta_series(build_named(LatticeFamily::A, 2), 3);
  const JacobiExpansion b = theta_series(A1(3), 3);
  const JacobiExpansion lhs = heat_H(tensor(a, b));
  const JacobiExpansion rhs = tensor(heat_H(a), b).with_weight(lhs.weight()) +
                              tensor(a, heat_H(b)).with_weight(lhs.weight());
  EXPECT_EQ(lhs, rhs);
}

TEST(Heat, LeibnizOnE8Tensor) {
  const JacobiExpansion a = theta_series(E8(), 2);
  const JacobiExpansion lhs = heat_H(tensor(a, a));
  const JacobiExpansion rhs = tensor(heat_H(a), a) + tensor(a, heat_H(a));
  EXPECT_EQ(lhs, rhs);
}

TEST(Heat, HkShape) {
  const JacobiExpansion phi = theta_series(build_named(LatticeFamily::D, 4), 3);
  const JacobiExpansion h = heat_Hk(phi, 2);
  EXPECT_EQ(h.weight(), 4);
  EXPECT_EQ(h.pole_order(), phi.pole_order());
  EXPECT_EQ(h.index(), phi.index());
  EXPECT_THROW(heat_Hk(phi, 3), std::invalid_argument);
  // theta has no singular terms, so neither does its image.
  EXPECT_TRUE(singular_part(h).empty());
}

TEST(Residual, Phi01) { EXPECT_EQ(gritsenko_residual(phi01_q0()), 0); }

TEST(Residual, Zero) { EXPECT_EQ(gritsenko_residual(JacobiExpansion(A1(), 0, 0, 1)), 0); }

TEST(Residual, Corrupted) { EXPECT_EQ(gritsenko_residual(phi01_q0(11)), 1); }

TEST(Residual, Preconditions) {
  EXPECT_THROW(gritsenko_residual(phi01_q0().with_weight(2)), std::invalid_argument);
  EXPECT_THROW(gritsenko_residual(JacobiExpansion(IntegerLattice(), 0, 0, 1)), std::invalid_argument);
  EXPECT_THROW(gritsenko_residual(JacobiExpansion(A1(), 0, -2, 1)), std::invalid_argument);
  JacobiExpansion bad(A1(), 0, -1, 1);
  bad.add(-1, pv({1}), 1);
  EXPECT_THROW(gritsenko_residual(bad), std::invalid_argument);
}

TEST(Singular, Phi01IsWeak) {
  const auto sing = singular_part(phi01_q0());
  ASSERT_EQ(sing.size(), 2u);
  for (const SingularTerm& t : sing) {
    EXPECT_EQ(t.n, 0);
    EXPECT_EQ(t.hyperbolic_norm, make_rational(-1, 2));
    EXPECT_EQ(t.coefficient, 1);
  }
  EXPECT_TRUE(sing[0].l < sing[1].l);
  EXPECT_EQ(classify(phi01_q0()), HolomorphyClass::weak);
}

TEST(Singular, InverseDelta) {
  const JacobiExpansion phi = JacobiExpansion::from_scalar(delta(3, true));
  const auto sing = singular_part(phi);
  ASSERT_EQ(sing.size(), 1u);
  EXPECT_EQ(sing[0].n, -1);
  EXPECT_EQ(sing[0].coefficient, 1);
  EXPECT_EQ(classify(phi), HolomorphyClass::weakly_holomorphic);
}

TEST(Invariance, ThetaE8) {
  const JacobiExpansion t = theta_series(E8(), 2);
  EXPECT_TRUE(elliptic_invariance_violations(t).empty());
  EXPECT_TRUE(parity_violations(t).empty());
}

TEST(Invariance, ThetaScaledA2) {
  const JacobiExpansion t = theta_series(build_named(LatticeFamily::A, 2, 3), 6);
  EXPECT_TRUE(elliptic_invariance_violations(t).empty());
}

TEST(Invariance, ThetaScaledD4) {
  const JacobiExpansion t = theta_series(build_named(LatticeFamily::D, 4, 2), 5);
  EXPECT_TRUE(elliptic_invariance_violations(t).empty());
  EXPECT_TRUE(parity_violations(t).empty());
}

TEST(Invariance, DetectsBrokenCoefficient) {
  JacobiExpansion t = theta_series(build_named(LatticeFamily::D, 4), 4);
  t.add(1, pv({2, -1, 0, 0}), 1);
  EXPECT_FALSE(elliptic_invariance_violations(t).empty());
  EXPECT_FALSE(parity_violations(t).empty());
}

TEST(Invariance, OddWeightParity) {
  JacobiExpansion phi(A1(), 1, 0, 1);
  phi.add(0, pv({1}), 1);
  phi.add(0, pv({-1}), -1);
  EXPECT_TRUE(parity_violations(phi).empty());
  phi.add(0, pv({-1}), 2);
  EXPECT_EQ(parity_violations(phi).size(), 2u);
}

TEST(Serialization, Format) {
  const std::string text = to_text(phi01_q0());
  EXPECT_EQ(text,
            "# weight 0\n# window 0 1\n# rank 1\n"
            "0\t-1/2\t1/1\n0\t0\t10/1\n0\t1/2\t1/1\n");
}

TEST(Serialization, RoundTripRandom) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  const IntegerLattice index = build_named(LatticeFamily::A, 2, 3);
  JacobiExpansion phi = theta_series(index, 4);
  for (int trial = 0; trial < 5; ++trial) {
    JacobiExpansion perturbed = phi;
    for (const auto& [key, c] : phi.terms())
      if (num(rng) > 30) perturbed.add(key, make_rational(num(rng), den(rng)));
    std::istringstream in(to_text(perturbed));
    EXPECT_EQ(read_text(in, index), perturbed);
  }
}

TEST(Serialization, RejectsWrongRank) {
  std::istringstream in(to_text(phi01_q0()));
  EXPECT_THROW(read_text(in, E8()), std::invalid_argument);
}

TEST(Expansion, WindowIsEnforced) {
  const JacobiExpansion t = theta_series(A1(), 2);
  EXPECT_THROW(t.coefficient(2, pv({0})), std::out_of_range);
  JacobiExpansion u = t;
  EXPECT_THROW(u.add(-1, pv({0}), 1), std::out_of_range);
}

}  // namespace
}  // namespace refl
