#include "refl/dd.hpp"

#include "refl/ez_forms.hpp"

#include <stdexcept>

namespace refl {

std::string to_string(DdFamily f) {
  switch (f) {
    case DdFamily::nA1:
      return "nA1";
    case DdFamily::An:
      return "A";
    case DdFamily::Dn:
      return "D";
  }
  return "unknown";
}

std::string to_string(DdConvention c) { return c == DdConvention::full_orbit ? "full-orbit" : "e-type"; }

Rational dd_weight(const IntegerLattice& lattice, const std::vector<DualVector>& S, int c) {
  if (lattice.rank() == 0) throw std::invalid_argument("dd_weight: rank 0");
  if (S.empty()) throw std::invalid_argument("dd_weight: empty vector set");
  if (c < 1) throw std::invalid_argument("dd_weight: c must be positive");
  Rational total = 0;
  for (const DualVector& s : S) total += s.norm();
  const Rational r(static_cast<long>(lattice.rank()));
  return (12 / r * c * total - Rational(c) * static_cast<long>(S.size())) / 2;
}

std::vector<DualVector> diagonal_vectors(const IntegerLattice& base, int m, DdConvention convention) {
  std::vector<DualVector> found;
  if (convention == DdConvention::full_orbit) {
    found = minimal_dual_vectors(base);
  } else {
    IntVector omega = IntVector::Zero(base.rank());
    omega(0) = 1;
    Rational best = -1;
    for (int sign : {1, -1}) {
      const CosetClass cls = coset_of(base, DualVector::from_pairing(base, sign * omega));
      for (DualVector& v : enumerate_vectors_up_to(base, cls.representative, base.norm_from_pairing(omega))) {
        if (best < 0 || v.norm() < best) {
          best = v.norm();
          found.clear();
        }
        if (v.norm() == best && std::find(found.begin(), found.end(), v) == found.end()) found.push_back(std::move(v));
      }
    }
  }
  if (m == 1) {
    std::sort(found.begin(), found.end());
    return found;
  }
  const IntegerLattice scaled = rescale(base, m);
  std::vector<DualVector> out;
  for (const DualVector& v : found) out.push_back(DualVector::from_pairing(scaled, v.pairing()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Smallest c >= 1 with 2 c k_1 integral.
int minimal_multiplicity(const Rational& k_per_c) {
  const Rational twice = 2 * k_per_c;
  return static_cast<int>(twice.get_den().get_si());
}

DdCandidate assess(DdFamily family, int n, int m, const IntegerLattice& L, const std::vector<DualVector>& S,
                   int c_max) {
  DdCandidate d{family, n, m, 1, 0, static_cast<int>(L.rank()), S.size(), S.front().norm(), false, std::nullopt};
  const Rational k1 = dd_weight(L, S, 1);
  d.c = minimal_multiplicity(k1);
  if (d.c > c_max) {
    d.k = k1 * d.c;
    d.exclusion_reason = "2k is not integral for c <= " + std::to_string(c_max);
    return d;
  }
  d.k = dd_weight(L, S, d.c);
  if (d.k <= 0)
    d.exclusion_reason = "k <= 0";
  else if (d.k < make_rational(d.rank, 2))
    d.exclusion_reason = "k below the singular weight rank/2";
  else
    d.admissible = true;
  return d;
}

}  // namespace

std::vector<DdCandidate> enumerate_nA1(int c_max) {
  if (c_max < 5) throw std::invalid_argument("enumerate_nA1: c_max must be at least 5");
  std::vector<DdCandidate> out;
  // k = c (6/m - n) > 0 forces nm <= 5
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; n * m <= 5; ++m) {
      const IntegerLattice L = build_named(LatticeFamily::A1scaled, n, m);
      DdCandidate d = assess(DdFamily::nA1, n, m, L, minimal_dual_vectors(L), c_max);
      if (d.admissible && m == 5) {
        d.admissible = false;
        d.exclusion_reason = "needs holomorphy check of the index-5 input (exclude_m5)";
      }
      out.push_back(std::move(d));
    }
  return out;
}

std::vector<DdCandidate> enumerate_AnDn(DdConvention convention) {
  std::vector<DdCandidate> out;
  for (DdFamily family : {DdFamily::An, DdFamily::Dn})
    for (int n = family == DdFamily::An ? 2 : 4; n <= 10; ++n)
      for (int m = 1; m <= 6; ++m) {
        const IntegerLattice base = build_named(family == DdFamily::An ? LatticeFamily::A : LatticeFamily::D, n);
        out.push_back(assess(family, n, m, rescale(base, m), diagonal_vectors(base, m, convention), 60));
      }
  return out;
}

M5Exclusion exclude_m5(int N) {
  JacobiExpansion psi = solve_weak_basis(5, 0, {{1, 5}, {0, 2}}, N);
  const auto z = [](int j) { return IntVector::Constant(1, j); };
  M5Exclusion out{psi, psi.coefficient(0, z(1)), psi.coefficient(0, z(0)), psi.coefficient(1, z(5)), {}, false, ""};
  for (const SingularTerm& t : singular_part(psi))
    if (t.coefficient < 0) out.negative_singular_terms.push_back(t);
  out.excluded = !out.negative_singular_terms.empty();
  out.verdict = out.excluded ? "excluded: non-holomorphic product" : "not excluded";
  return out;
}

std::vector<CounterpartCheck> dd_counterparts(int N) {
  std::vector<CounterpartCheck> out;
  for (int m = 1; m <= 4; ++m) {
    const Rational k = Rational(6) / m - 1;
    const JacobiExpansion f = solve_weak_basis(m, 0, {{1, 1}, {0, 2 * k}}, N);
    Rational lowest = 0;
    bool first = true;
    for (const SingularTerm& t : singular_part(f)) {
      if (first || t.coefficient < lowest) lowest = t.coefficient;
      first = false;
    }
    out.push_back({m, k, lowest, lowest >= 0});
  }
  return out;
}

}  // namespace refl
