#include "refl/reflective.hpp"

#include <algorithm>
#include <sstream>

namespace refl {

namespace {

std::string str(const Rational& x) { return to_short_string(x); }

Integer as_multiplicity(const Rational& x) {
  if (!is_integer(x)) throw DivisorError(DivisorError::Reason::non_integral, "divisor multiplicity " + str(x) + " is not an integer");
  return x.get_num();
}

struct Observation {
  int n;
  Rational coefficient;
};

}  // namespace

// ---------------------------------------------------------------------------
// Divisors and weights

DivisorData derive_divisor(const JacobiExpansion& phi, const ReflectiveKind& kind) {
  if (phi.weight() != 0) throw std::invalid_argument("derive_divisor: input must have weight 0");
  if (phi.pole_order() > 1) throw std::invalid_argument("derive_divisor: pole order exceeds 1");
  const IntegerLattice& L = phi.index();
  const std::vector<CosetClass> classes = reflective_classes(L, kind);
  const Rational class_h = kind.singular_discriminant();
  const Rational beta0 = phi.coefficient(-1, IntVector::Zero(L.rank()));

  // Sort every singular term into the trivial orbit, one of the classes, or neither.
  std::vector<Observation> trivial;
  std::map<CosetClass, std::vector<Observation>> by_class;
  std::vector<std::string> unexpected;
  for (const auto& [key, coefficient] : phi.terms()) {
    const Rational h = phi.hyperbolic_norm(key);
    if (h >= 0) continue;
    Rational multiplicity = coefficient;
    bool expected = false;
    if (L.contains_pairing(pairing_of(key))) {
      expected = h == -2;
      if (expected) trivial.push_back({key.n, coefficient});
    } else if (h == class_h) {
      const CosetClass cls = coset_of(L, phi.dual_vector(key));
      if (std::find(classes.begin(), classes.end(), cls) != classes.end()) {
        expected = true;
        if (kind.type == ReflectiveKind::Type::two_reflective) multiplicity += beta0;
        by_class[cls].push_back({key.n, coefficient});
      }
    }
    if (multiplicity < 0)
      throw DivisorError(DivisorError::Reason::non_holomorphic_product,
                         "non-holomorphic product: singular coefficient " + str(coefficient) + " at q^" +
                             std::to_string(key.n) + " gives a negative multiplicity");
    if (!expected) {
      std::ostringstream s;
      s << "unexpected singular term at q^" << key.n << " with hyperbolic norm " << str(h);
      unexpected.push_back(s.str());
    }
  }
  if (!unexpected.empty()) throw DivisorError(DivisorError::Reason::unexpected_singular_term, unexpected.front());

  const int first = std::max(-1, phi.valuation());
  auto check_orbit = [&](const CosetClass& cls, const Rational& h, const Rational& value,
                         const std::vector<Observation>& seen, const std::string& name) {
    for (const Observation& o : seen)
      if (o.coefficient != value)
        throw DivisorError(DivisorError::Reason::non_constant_orbit,
                           "coefficients along " + name + " are not constant: " + str(o.coefficient) + " vs " + str(value));
    if (value == 0) return;
    for (int n = first; n < phi.trunc(); ++n) {
      const Rational norm = Rational(2 * n) - h;
      if (norm < 0) continue;
      const auto expected = count_vectors(L, cls, norm);
      const auto present = static_cast<std::int64_t>(std::count_if(seen.begin(), seen.end(), [n](const Observation& o) { return o.n == n; }));
      if (present != expected)
        throw DivisorError(DivisorError::Reason::non_constant_orbit,
                           name + " is incomplete at q^" + std::to_string(n) + ": " + std::to_string(present) + " of " +
                               std::to_string(expected) + " vectors carry the coefficient");
    }
  };

  check_orbit(trivial_coset(L), Rational(-2), beta0, trivial, "the lattice orbit");
  DivisorData out{kind, as_multiplicity(beta0), {}};
  bool positive = out.beta0 > 0;
  for (const CosetClass& cls : classes) {
    const auto it = by_class.find(cls);
    const std::vector<Observation> seen = it == by_class.end() ? std::vector<Observation>{} : it->second;
    const Rational value = seen.empty() ? Rational(0) : seen.front().coefficient;
    check_orbit(cls, class_h, value, seen, "class " + to_short_string(cls.representative.coords()(0)) + "...");
    const Rational beta = kind.type == ReflectiveKind::Type::two_reflective ? value + beta0 : value;
    out.beta[cls] = as_multiplicity(beta);
    positive = positive || out.beta[cls] > 0;
  }
  if (!positive) throw DivisorError(DivisorError::Reason::trivial, "the input has no divisor");
  return out;
}

Rational weight_two_reflective(const IntegerLattice& lattice, const DivisorData& divisor) {
  if (divisor.kind.type != ReflectiveKind::Type::two_reflective)
    throw std::invalid_argument("weight_two_reflective: divisor is not 2-reflective");
  if (lattice.rank() == 0) throw std::invalid_argument("weight_two_reflective: rank 0");
  const Rational r(static_cast<long>(lattice.rank()));
  const Rational roots(static_cast<long>(count_roots(lattice)));
  Rational sum = 0;
  for (const auto& [cls, beta] : divisor.beta) {
    if (beta == divisor.beta0) continue;
    sum += Rational(beta - divisor.beta0) * Rational(static_cast<long>(count_R_mu(lattice, cls.representative.coords())));
  }
  return Rational(divisor.beta0) * (12 + roots * (12 / r - make_rational(1, 2))) + (3 / r - make_rational(1, 2)) * sum;
}

Rational weight_prime_level(const IntegerLattice& lattice, int p, const DivisorData& divisor) {
  if (divisor.kind.type != ReflectiveKind::Type::prime_level || divisor.kind.p != p)
    throw std::invalid_argument("weight_prime_level: divisor kind does not match p");
  if (lattice.rank() == 0) throw std::invalid_argument("weight_prime_level: rank 0");
  const std::int64_t level = det_and_level(lattice).level;
  if (level != 1 && level != p)
    throw std::invalid_argument("weight_prime_level: lattice has level " + std::to_string(level) + ", not " + std::to_string(p));
  const Rational r(static_cast<long>(lattice.rank()));
  const Rational roots(static_cast<long>(count_roots(lattice)));
  Rational sum = 0;
  for (const auto& [cls, beta] : divisor.beta)
    if (beta != 0) sum += Rational(beta) * Rational(static_cast<long>(count_C_gamma(lattice, cls, p)));
  return Rational(divisor.beta0) * (12 + roots * (12 / r - make_rational(1, 2))) +
         (Rational(12) / (p * r) - make_rational(1, 2)) * sum;
}

// ---------------------------------------------------------------------------
// Chain constants

ClassificationConstants chain_constants(int n0, const Rational& a, const Rational& d, const Rational& beta0) {
  if (n0 == 24 || n0 == 28 || n0 == 32) throw std::domain_error("chain_constants: n0 = " + std::to_string(n0) + " divides by zero");
  const Rational n(n0);
  ClassificationConstants k{n0, a, d, beta0, 0, 0, 0, 0, 0, 0, 0};
  k.c1 = (n - a) / (n - 24);
  k.c2 = k.c1 * (n - a - 4) / (n - 28);
  k.c3 = k.c2 * (n - a - 8) / (n - 32);
  k.d1 = n * (d - 24 * beta0) / (n - 24);
  k.d2 = (n - 4) * (k.d1 - 24 * beta0) / (n - 28);
  k.d3 = (n - 8) * (k.d2 - 24 * beta0) / (n - 32);
  k.u = (d - 504 * beta0) * (k.c1 - k.c3) + (k.d1 + 240 * beta0) * (k.c3 - 1) + k.d3 * (1 - k.c1);
  return k;
}

LinearForm u_coefficients(int n0, const Rational& a) {
  return {chain_constants(n0, a, 1, 0).u, chain_constants(n0, a, 0, 1).u};
}

bool u_nonvanishing(int n0, const Rational& a) {
  // d >= n0 and beta0 >= 1 reach every positive ratio d / beta0.
  const LinearForm f = u_coefficients(n0, a);
  if (f.A == 0 || f.B == 0) return f.A != 0 || f.B != 0;
  return sgn(f.A) == sgn(f.B);
}

std::optional<Rational> solve_g_vanishing(int n0, const Rational& a) {
  if (chain_constants(n0, a, 0, 1).c2 != 1) return std::nullopt;
  // d2 - d - 240 beta0 is affine in d for beta0 = 1
  const Rational at0 = chain_constants(n0, a, 0, 1).d2 - 240;
  const Rational at1 = chain_constants(n0, a, 1, 1).d2 - 1 - 240;
  const Rational slope = at1 - at0;
  if (slope == 0) return std::nullopt;
  return -at0 / slope;
}

std::string to_string(CompleteDivisorVerdict v) {
  switch (v) {
    case CompleteDivisorVerdict::possible:
      return "possible";
    case CompleteDivisorVerdict::impossible:
      return "impossible";
    case CompleteDivisorVerdict::forced_unimodular_16:
      return "forced-unimodular-16";
  }
  return "unknown";
}

CompleteDivisorReport complete_divisor_case(int n0, long R) {
  if (n0 < 1 || n0 > 23) throw std::invalid_argument("complete_divisor_case: n0 must lie in 1..23");
  if (R < 0) throw std::invalid_argument("complete_divisor_case: R must be nonnegative");
  const Rational n(n0), r(R);
  CompleteDivisorReport out;
  out.g0 = r * (1 - Rational(14) / n) + 6 * (n - 26);
  out.h0 = 24 * r / n - 720;
  const bool g_must_vanish = singular_weight_vanishes(4, n0);
  const bool h_must_vanish = singular_weight_vanishes(6, n0);
  if ((g_must_vanish && out.g0 != 0) || (h_must_vanish && out.h0 != 0))
    out.verdict = CompleteDivisorVerdict::impossible;
  else if (n0 == 16 && out.g0 == 0 && out.h0 == 0)
    out.verdict = CompleteDivisorVerdict::forced_unimodular_16;
  else
    out.verdict = CompleteDivisorVerdict::possible;
  return out;
}

bool singular_weight_vanishes(const Rational& weight, int n0) { return weight < make_rational(n0, 2); }

Rational riemann_roch_rank_bound(int p) {
  if (!is_prime(p)) throw std::invalid_argument("riemann_roch_rank_bound: p must be prime");
  return 8 + Rational(24) / (p + 1);
}

bool rr_inequality(long nu0, long nu_inf, int n0, int p) {
  if (!is_prime(p)) throw std::invalid_argument("rr_inequality: p must be prime");
  const Rational v = Rational(p) * nu0 + nu_inf;
  return v >= -1 && v <= (4 - make_rational(n0, 2)) * (p + 1) / 12;
}

long min_root_bound(int n0, int p, const Rational& k_over_beta0) {
  if (n0 <= 0) throw std::invalid_argument("min_root_bound: rank must be positive");
  if (Rational(12) / (p * n0) - make_rational(1, 2) > 0)
    throw std::domain_error("min_root_bound: the class term has positive coefficient");
  const Rational slope = Rational(12) / n0 - make_rational(1, 2);
  const Rational need = k_over_beta0 - 12;
  if (need <= 0) return 0;
  if (slope <= 0) throw std::domain_error("min_root_bound: no number of roots reaches this weight");
  return to_int64(ceil(need / slope));
}

// ---------------------------------------------------------------------------
// T_n = 2U + 2E8(-1) + <-2n>

TnReport check_Tn(int n) {
  if (n < 1) throw std::invalid_argument("check_Tn: n must be positive");
  const IntegerLattice e8 = build_named(LatticeFamily::E8, 0);
  const IntegerLattice L = direct_sum(direct_sum(e8, e8), build_named(LatticeFamily::rank1, n));
  const Rational r(static_cast<long>(L.rank()));
  const std::optional<Rational> required = solve_g_vanishing(static_cast<int>(L.rank()), 6);

  TnReport out;
  out.n = n;
  out.roots = count_roots(L);
  out.class_vectors = 0;
  for (const CosetClass& cls : reflective_classes(L, ReflectiveKind::two_reflective()))
    out.class_vectors += count_R_mu(L, cls.representative.coords());
  out.formula_weight_per_beta0 = 12 + Rational(out.roots) * (12 / r - make_rational(1, 2));
  out.class_coefficient = (3 / r - make_rational(1, 2)) * Rational(out.class_vectors);
  out.required_weight_per_beta0 = *required / 2;
  const Rational gap = out.required_weight_per_beta0 - out.formula_weight_per_beta0;
  if (out.class_coefficient == 0) {
    out.obstructed = gap != 0;
    if (!out.obstructed) out.beta_difference = Rational(0);
  } else {
    const Rational x = gap / out.class_coefficient;
    out.beta_difference = x;
    out.obstructed = !is_integer(x) || x < -1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rank tables

std::vector<ClassificationRow> rank_classification(const ReflectiveKind& kind) {
  std::vector<ClassificationRow> rows;
  if (kind.type == ReflectiveKind::Type::two_reflective) {
    const Rational a = 6;
    rows.push_back({"<= 12", "", "documented", "outside the weight-6 chain: phi6 only vanishes for rank >= 13"});
    for (int n0 = 13; n0 <= 23; ++n0) {
      if (n0 <= 14) {
        const LinearForm f = u_coefficients(n0, a);
        rows.push_back({std::to_string(n0), "", u_nonvanishing(n0, a) ? "derived" : "undetermined",
                        "excluded: u = (" + str(f.A) + ") d + (" + str(f.B) + ") beta0 != 0 for d >= " +
                            std::to_string(n0) + ", beta0 >= 1"});
        continue;
      }
      if (const auto ratio = solve_g_vanishing(n0, a)) {
        rows.push_back({std::to_string(n0), str(*ratio / 2) + " beta0", "derived",
                        "c2 = 1 and g = 0 give d = " + str(*ratio) + " beta0"});
        continue;
      }
      const CompleteDivisorReport unimodular = complete_divisor_case(n0, n0 == 16 ? 480 : 0);
      if (unimodular.verdict == CompleteDivisorVerdict::forced_unimodular_16) {
        rows.push_back({"16", "132", "derived",
                        "c2 != 1 forces S2 = 0; complete 2-divisor with g0 = h0 = 0 only at R = 480: unimodular"});
      } else {
        rows.push_back({std::to_string(n0), "", "derived",
                        "excluded: c2 = " + str(chain_constants(n0, a, 0, 1).c2) +
                            " != 1 forces S2 = 0, and the complete 2-divisor case is impossible"});
      }
    }
    rows.push_back({"24", "12", "documented", "unimodular of rank 24 with R(L) = 0"});
    rows.push_back({"signature (2, n), n >= 15, n != 19", "", "documented",
                    "no 2-reflective lattice except II_{2,18} and II_{2,26} (overlattice argument)"});
    return rows;
  }

  const int p = kind.p;
  const Rational a = Rational(24) / p;
  const Rational bound = riemann_roch_rank_bound(p);
  long max_rank = to_int64(floor(bound));
  std::string bound_note = "Riemann-Roch: rank <= 8 + 24/(p+1) = " + str(bound);
  // phi6 vanishes from rank 13 on; u != 0 excludes the top rank.
  if (max_rank >= 13 && u_nonvanishing(static_cast<int>(max_rank), a)) {
    bound_note += "; rank " + std::to_string(max_rank) + " excluded by u != 0";
    --max_rank;
  }
  rows.push_back({"<= " + std::to_string(max_rank), "", "derived", bound_note});
  if (max_rank >= 13) {
    const LinearForm f = u_coefficients(static_cast<int>(max_rank), a);
    if (f.A == 0 && f.B == 0)
      rows.push_back({std::to_string(max_rank), "undetermined", "undetermined",
                      "u vanishes identically, so the weight is not fixed"});
  }
  for (int n0 = 9; n0 <= 23; ++n0) {
    if (const auto ratio = solve_g_vanishing(n0, a))
      rows.push_back({std::to_string(n0), str(*ratio / 2) + " beta0", "derived",
                      "c2 = 1 at rank 14 + 12/p and g = 0 give d = " + str(*ratio) + " beta0"});
  }
  if (p == 2)
    rows.push_back({"signature (2, n), n > 22", "", "documented", "no reflective lattice of level 2 except II_{2,26}(2)"});
  else if (p == 3)
    rows.push_back({"signature (2, n), n >= 16, n != 20", "", "documented",
                    "no reflective lattice of level 3 except II_{2,18}(3) and II_{2,26}(3)"});
  else
    rows.push_back({"signature (2, n), n > 10 + 24/(p+1)", "", "documented",
                    "no reflective lattice of level p except II_{2,18}(p) and II_{2,26}(p)"});
  return rows;
}

}  // namespace refl
