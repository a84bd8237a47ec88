#include "refl/ez_forms.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace refl {

namespace {

// Series in q^{1/24} and zeta^{1/2}: key (24 * q-exponent, 2 * zeta-exponent).
// Coefficients are known for q24 < trunc.
struct Bivariate {
  int valuation = 0;
  int trunc = 0;
  std::map<std::pair<int, int>, Rational> c;

  void add(int q24, int z2, const Rational& v) {
    if (q24 >= trunc || v == 0) return;
    auto [it, inserted] = c.try_emplace({q24, z2}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) c.erase(it);
    }
  }
};

Bivariate operator*(const Bivariate& a, const Bivariate& b) {
  Bivariate out;
  out.valuation = a.valuation + b.valuation;
  out.trunc = std::min(a.trunc + b.valuation, b.trunc + a.valuation);
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c) {
      if (ka.first + kb.first >= out.trunc) break;
      out.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    }
  return out;
}

Bivariate operator+(const Bivariate& a, const Bivariate& b) {
  Bivariate out;
  out.valuation = std::min(a.valuation, b.valuation);
  out.trunc = std::min(a.trunc, b.trunc);
  for (const auto& [k, v] : a.c) out.add(k.first, k.second, v);
  for (const auto& [k, v] : b.c) out.add(k.first, k.second, v);
  return out;
}

Bivariate scaled(const Rational& s, Bivariate a) {
  for (auto& [k, v] : a.c) v *= s;
  return a;
}

// 1/f for f free of zeta with a nonzero coefficient at its valuation.
Bivariate reciprocal(const Bivariate& f) {
  std::map<int, Rational> s;
  for (const auto& [k, v] : f.c) {
    if (k.second != 0) throw std::logic_error("reciprocal: series depends on zeta");
    s[k.first] = v;
  }
  const int v0 = f.valuation;
  auto it = s.find(v0);
  if (it == s.end()) throw std::logic_error("reciprocal: vanishing leading coefficient");
  const Rational lead = it->second;
  const int precision = f.trunc - v0;
  std::vector<Rational> inv(static_cast<std::size_t>(precision));
  inv[0] = 1 / lead;
  for (int i = 1; i < precision; ++i) {
    Rational acc = 0;
    for (int j = 1; j <= i; ++j) {
      auto sj = s.find(v0 + j);
      if (sj != s.end()) acc += sj->second * inv[static_cast<std::size_t>(i - j)];
    }
    inv[static_cast<std::size_t>(i)] = -acc / lead;
  }
  Bivariate out;
  out.valuation = -v0;
  out.trunc = -v0 + precision;
  for (int i = 0; i < precision; ++i) out.add(-v0 + i, 0, inv[static_cast<std::size_t>(i)]);
  return out;
}

// sum_n sign(n) q^{(2n + s)^2 / 8} zeta^{(2n + s) / 2} with s = 0 or 1;
// at_zero drops the zeta dependence.
Bivariate theta_sum(int s, bool alternating, bool at_zero, int trunc) {
  Bivariate out;
  out.valuation = s == 0 ? 0 : 3;
  out.trunc = trunc;
  for (int n = -200; n <= 200; ++n) {
    const int r = 2 * n + s;
    const int q24 = 3 * r * r;
    if (q24 >= trunc) continue;
    const int sign = alternating && (n % 2 != 0) ? -1 : 1;
    out.add(q24, at_zero ? 0 : r, sign);
  }
  return out;
}

// eta = q^{1/24} sum_k (-1)^k q^{k(3k-1)/2}
Bivariate eta(int trunc) {
  Bivariate out;
  out.valuation = 1;
  out.trunc = trunc;
  for (int k = -100; k <= 100; ++k) {
    const int q24 = 1 + 12 * k * (3 * k - 1);
    if (q24 < trunc) out.add(q24, 0, k % 2 == 0 ? 1 : -1);
  }
  return out;
}

Bivariate power(const Bivariate& f, int e) {
  Bivariate out = f;
  for (int i = 1; i < e; ++i) out = out * f;
  return out;
}

JacobiExpansion to_expansion(const Bivariate& b, int weight, int N) {
  JacobiExpansion out(build_named(LatticeFamily::A1scaled, 1), weight, 0, N);
  if (b.trunc < 24 * N) throw std::logic_error("ez_generator: internal precision too low");
  for (const auto& [k, v] : b.c) {
    if (k.first >= 24 * N) continue;
    if (k.first % 24 != 0 || k.second % 2 != 0)
      throw std::logic_error("ez_generator: fractional exponent with nonzero coefficient");
    out.add(k.first / 24, IntVector::Constant(1, k.second / 2), v);
  }
  return out;
}

void expect_q0(const JacobiExpansion& phi, std::initializer_list<std::pair<int, long>> layer) {
  std::size_t count = 0;
  for (const auto& [key, c] : phi.terms())
    if (key.n == 0) ++count;
  bool ok = count == layer.size();
  for (const auto& [j, c] : layer) ok = ok && phi.coefficient(0, IntVector::Constant(1, j)) == c;
  if (!ok) throw std::logic_error("ez_generator: unexpected q^0 layer");
}

JacobiExpansion build_phi_m2_1(int N) {
  const int T = 24 * N + 24;
  // -theta_1^2 / eta^6 with theta_1 = sum (-1)^n q^{(2n+1)^2/8} zeta^{(2n+1)/2}
  const Bivariate t1 = theta_sum(1, true, false, T);
  const Bivariate e6 = power(eta(T), 6);
  const JacobiExpansion phi = to_expansion(t1 * t1 * reciprocal(e6), -2, N);
  expect_q0(phi, {{1, 1}, {0, -2}, {-1, 1}});
  return phi;
}

JacobiExpansion build_phi_0_1(int N) {
  const int T = 24 * N + 48;
  // 4 sum_{i=2,3,4} theta_i(tau, z)^2 / theta_i(tau, 0)^2
  Bivariate sum;
  sum.trunc = T;
  for (const auto& [s, alternating] : {std::pair{1, false}, std::pair{0, false}, std::pair{0, true}}) {
    const Bivariate tz = theta_sum(s, alternating, false, T);
    const Bivariate t0 = theta_sum(s, alternating, true, T);
    sum = sum + tz * tz * reciprocal(t0 * t0);
  }
  const JacobiExpansion phi = to_expansion(scaled(4, sum), 0, N);
  expect_q0(phi, {{1, 1}, {0, 10}, {-1, 1}});
  return phi;
}

JacobiExpansion build_E_4_1(int N) {
  const JacobiExpansion a = mul_scalar(build_phi_0_1(N), eisenstein(EisensteinKind::E4, N));
  const JacobiExpansion b = mul_scalar(build_phi_m2_1(N), eisenstein(EisensteinKind::E6, N));
  const JacobiExpansion e41 = make_rational(1, 12) * (a - b.with_weight(4));
  expect_q0(e41, {{0, 1}});
  if (classify(e41) != HolomorphyClass::holomorphic) throw std::logic_error("ez_generator: E_4_1 is not holomorphic");
  return e41;
}

QSeries unit_series(int N) {
  QSeries one(0, N, 0);
  one.set(0, 1);
  return one;
}

// Exact row reduction of [A | b]; returns the nullity or throws NoSolution.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j <= unknowns; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i][unknowns] != 0) throw NoSolution();
  if (pivots.size() < unknowns) throw NonUnique(static_cast<int>(unknowns - pivots.size()));
  std::vector<Rational> x(unknowns);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][unknowns];
  return x;
}

}  // namespace

std::string to_string(EzGenerator g) {
  switch (g) {
    case EzGenerator::phi_0_1:
      return "phi_0_1";
    case EzGenerator::phi_m2_1:
      return "phi_m2_1";
    case EzGenerator::E_4_1:
      return "E_4_1";
  }
  return "unknown";
}

JacobiExpansion ez_generator(EzGenerator g, int N) {
  if (N < 2) throw std::invalid_argument("ez_generator: N must be at least 2");
  switch (g) {
    case EzGenerator::phi_0_1:
      return build_phi_0_1(N);
    case EzGenerator::phi_m2_1:
      return build_phi_m2_1(N);
    case EzGenerator::E_4_1:
      return build_E_4_1(N);
  }
  throw std::invalid_argument("ez_generator: unknown generator");
}

JacobiExpansion solve_weak_basis(int m, int weight, const std::map<int, Rational>& q0_target, int N) {
  if (m < 1) throw std::invalid_argument("solve_weak_basis: index must be positive");
  if (N < 2) throw std::invalid_argument("solve_weak_basis: N must be at least 2");
  for (const auto& [j, c] : q0_target)
    if (j < 0 || j > m) throw std::invalid_argument("solve_weak_basis: target exponent outside 0..m");

  struct Monomial {
    int a, b, c, d;
  };
  std::vector<Monomial> basis;
  for (int b = 0; b <= m; ++b) {
    const int rest = weight + 2 * b;  // 4c + 6d
    if (rest < 0) continue;
    for (int d = 0; 6 * d <= rest; ++d)
      if ((rest - 6 * d) % 4 == 0) basis.push_back({m - b, b, (rest - 6 * d) / 4, d});
  }
  if (basis.empty()) throw NoSolution();

  const JacobiExpansion phi0 = build_phi_0_1(N);
  const JacobiExpansion phim2 = build_phi_m2_1(N);
  const QSeries e4 = eisenstein(EisensteinKind::E4, N);
  const QSeries e6 = eisenstein(EisensteinKind::E6, N);

  std::vector<JacobiExpansion> forms;
  for (const Monomial& mono : basis) {
    JacobiExpansion f = mono.a > 0 ? phi0 : phim2;
    for (int i = 1; i < mono.a; ++i) f = product(f, phi0);
    for (int i = mono.a > 0 ? 0 : 1; i < mono.b; ++i) f = product(f, phim2);
    QSeries s = unit_series(N);
    if (mono.c > 0) s = s * e4.pow(static_cast<unsigned>(mono.c));
    if (mono.d > 0) s = s * e6.pow(static_cast<unsigned>(mono.d));
    forms.push_back(mul_scalar(f, s));
  }

  // One equation per zeta^j, j = 0..m; the forms are even in zeta.
  std::vector<std::vector<Rational>> rows;
  for (int j = 0; j <= m; ++j) {
    std::vector<Rational> row;
    for (const JacobiExpansion& f : forms) row.push_back(f.coefficient(0, IntVector::Constant(1, j)));
    auto it = q0_target.find(j);
    row.push_back(it == q0_target.end() ? Rational(0) : it->second);
    rows.push_back(std::move(row));
  }
  const std::vector<Rational> x = solve_exact(std::move(rows), forms.size());

  JacobiExpansion out(forms.front().index(), weight, 0, N);
  for (std::size_t i = 0; i < forms.size(); ++i) out = out + x[i] * forms[i];
  return out;
}

}  // namespace refl
