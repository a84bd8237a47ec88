#include "refl/lattice.hpp"

#include "refl/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace refl {

namespace {

IntMatrix cartan_A(int n) {
  IntMatrix g = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return g;
}

IntMatrix cartan_D(int n) {
  IntMatrix g = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  for (int i = 0; i + 2 < n; ++i) g(i, i + 1) = g(i + 1, i) = -1;
  // e_{n-1} + e_n meets e_{n-2} - e_{n-1} and is orthogonal to e_{n-1} - e_n.
  g(n - 3, n - 1) = g(n - 1, n - 3) = -1;
  return g;
}

IntMatrix cartan_E8() {
  // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
  IntMatrix g = 2 * IntMatrix::Identity(8, 8);
  const int edges[7][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
  for (const auto& e : edges) g(e[0], e[1]) = g(e[1], e[0]) = -1;
  return g;
}

std::string scaled_label(std::string base, int m) {
  if (m == 1) return base;
  return base + "(" + std::to_string(m) + ")";
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntegerLattice

IntegerLattice::IntegerLattice() : IntegerLattice(IntMatrix(0, 0)) {}

IntegerLattice::IntegerLattice(IntMatrix gram, std::string label) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("Gram matrix is not square");
  if (gram != gram.transpose()) throw std::invalid_argument("Gram matrix is not symmetric");
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    if (gram(i, i) % 2 != 0) throw std::invalid_argument("lattice is not even");
  for (Eigen::Index k = 1; k <= gram.rows(); ++k)
    if (refl::determinant<Integer>(gram.topLeftCorner(k, k)) <= 0)
      throw std::invalid_argument("Gram matrix is not positive definite");

  auto data = std::make_shared<Data>();
  data->det = refl::determinant<Integer>(gram);
  data->inverse = refl::inverse(gram);
  data->adjugate.resize(gram.rows(), gram.cols());
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      Rational v = data->inverse(i, j) * data->det;
      data->adjugate(i, j) = to_int64(v.get_num());
    }
  data->decomposition = quadratic_decomposition(gram);
  data->dual_decomposition = quadratic_decomposition(data->inverse);
  data->gram = std::move(gram);
  data->label = std::move(label);
  data_ = std::move(data);
}

Rational IntegerLattice::norm_from_pairing(const IntVector& pairing) const {
  return inner_from_pairing(pairing, pairing);
}

Rational IntegerLattice::inner_from_pairing(const IntVector& a, const IntVector& b) const {
  const IntMatrix& adj = data_->adjugate;
  __int128 acc = 0;
  for (Eigen::Index i = 0; i < adj.rows(); ++i) {
    if (a(i) == 0) continue;
    __int128 row = 0;
    for (Eigen::Index j = 0; j < adj.cols(); ++j) row += static_cast<__int128>(adj(i, j)) * b(j);
    acc += row * a(i);
  }
  if (acc > std::numeric_limits<long>::max() || acc < std::numeric_limits<long>::min())
    throw std::overflow_error("inner product overflow");
  Rational out(static_cast<long>(acc));
  out /= data_->det;
  return out;
}

RationalVector IntegerLattice::coords_from_pairing(const IntVector& pairing) const {
  // coords = G^{-1} pairing = adj(G) pairing / det
  const IntMatrix& adj = data_->adjugate;
  RationalVector out(rank());
  for (Eigen::Index i = 0; i < rank(); ++i) {
    __int128 acc = 0;
    for (Eigen::Index j = 0; j < rank(); ++j) acc += static_cast<__int128>(adj(i, j)) * pairing(j);
    if (acc > std::numeric_limits<long>::max() || acc < std::numeric_limits<long>::min())
      throw std::overflow_error("coordinate overflow");
    out(i) = Rational(static_cast<long>(acc)) / data_->det;
  }
  return out;
}

bool IntegerLattice::contains_pairing(const IntVector& pairing) const {
  const IntMatrix& adj = data_->adjugate;
  const Integer& det = data_->det;
  for (Eigen::Index i = 0; i < rank(); ++i) {
    __int128 acc = 0;
    for (Eigen::Index j = 0; j < rank(); ++j) acc += static_cast<__int128>(adj(i, j)) * pairing(j);
    if (acc > std::numeric_limits<long>::max() || acc < std::numeric_limits<long>::min())
      throw std::overflow_error("coordinate overflow");
    if (Integer(static_cast<long>(acc)) % det != 0) return false;
  }
  return true;
}

IntegerLattice IntegerLattice::with_label(std::string label) const {
  IntegerLattice out = *this;
  auto data = std::make_shared<Data>(*data_);
  data->label = std::move(label);
  out.data_ = std::move(data);
  return out;
}

// ---------------------------------------------------------------------------
// DualVector

DualVector DualVector::from_coords(const IntegerLattice& lattice, const RationalVector& coords) {
  if (coords.size() != lattice.rank()) throw std::invalid_argument("coordinate vector has the wrong size");
  DualVector v;
  v.coords_ = coords;
  v.pairing_.resize(coords.size());
  for (Eigen::Index i = 0; i < lattice.rank(); ++i) {
    Rational acc = 0;
    for (Eigen::Index j = 0; j < lattice.rank(); ++j) acc += coords(j) * lattice.gram()(i, j);
    if (!is_integer(acc)) throw std::invalid_argument("vector is not in the dual lattice");
    v.pairing_(i) = to_int64(acc.get_num());
  }
  v.norm_ = lattice.norm_from_pairing(v.pairing_);
  return v;
}

DualVector DualVector::from_pairing(const IntegerLattice& lattice, const IntVector& pairing) {
  if (pairing.size() != lattice.rank()) throw std::invalid_argument("pairing vector has the wrong size");
  DualVector v;
  v.pairing_ = pairing;
  v.coords_ = lattice.coords_from_pairing(pairing);
  v.norm_ = lattice.norm_from_pairing(pairing);
  return v;
}

DualVector DualVector::zero(const IntegerLattice& lattice) {
  return from_pairing(lattice, IntVector::Zero(lattice.rank()));
}

bool DualVector::is_zero() const { return pairing_.isZero(); }

bool DualVector::in_lattice() const {
  for (Eigen::Index i = 0; i < coords_.size(); ++i)
    if (!is_integer(coords_(i))) return false;
  return true;
}

DualVector DualVector::operator-() const {
  DualVector out;
  out.coords_ = coords_;
  for (Eigen::Index i = 0; i < coords_.size(); ++i) out.coords_(i) = -coords_(i);
  out.pairing_ = -pairing_;
  out.norm_ = norm_;
  return out;
}

bool operator<(const DualVector& a, const DualVector& b) {
  const Eigen::Index n = std::min(a.coords_.size(), b.coords_.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    const int c = cmp(a.coords_(i), b.coords_(i));
    if (c != 0) return c < 0;
  }
  return a.coords_.size() < b.coords_.size();
}

// ---------------------------------------------------------------------------
// Constructions

IntegerLattice build_named(LatticeFamily family, int n, int m) {
  if (m <= 0) throw std::invalid_argument("scale m must be positive");
  IntMatrix g;
  std::string label;
  switch (family) {
    case LatticeFamily::A:
      if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
      g = cartan_A(n);
      label = "A" + std::to_string(n);
      break;
    case LatticeFamily::D:
      if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
      g = cartan_D(n);
      label = "D" + std::to_string(n);
      break;
    case LatticeFamily::E8:
      g = cartan_E8();
      label = "E8";
      break;
    case LatticeFamily::A1scaled:
      if (n < 1) throw std::invalid_argument("nA_1 needs n >= 1");
      g = 2 * IntMatrix::Identity(n, n);
      label = n == 1 ? "A1" : std::to_string(n) + "A1";
      break;
    case LatticeFamily::rank1:
      if (n < 1) throw std::invalid_argument("<2n> needs n >= 1");
      g = IntMatrix::Constant(1, 1, 2 * n);
      label = "<" + std::to_string(2 * n) + ">";
      break;
  }
  return IntegerLattice(g * m, scaled_label(label, m));
}

IntegerLattice direct_sum(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.rank() == 0) return b;
  if (b.rank() == 0) return a;
  const Eigen::Index n = a.rank() + b.rank();
  IntMatrix g = IntMatrix::Zero(n, n);
  g.topLeftCorner(a.rank(), a.rank()) = a.gram();
  g.bottomRightCorner(b.rank(), b.rank()) = b.gram();
  return IntegerLattice(std::move(g), a.label() + "+" + b.label());
}

IntegerLattice rescale(const IntegerLattice& lattice, int m) {
  if (m <= 0) throw std::invalid_argument("scale m must be positive");
  return IntegerLattice(lattice.gram() * m, scaled_label("(" + lattice.label() + ")", m));
}

DetLevel det_and_level(const IntegerLattice& lattice) {
  // N(x,x) in 2Z for all dual x  <=>  N G^{-1}_{ij} in Z (i != j) and
  // N G^{-1}_{ii} / 2 in Z.
  Integer level = 1;
  const RationalMatrix& inv = lattice.inverse_gram();
  for (Eigen::Index i = 0; i < inv.rows(); ++i)
    for (Eigen::Index j = i; j < inv.cols(); ++j) {
      const Rational v = i == j ? Rational(inv(i, j) / 2) : inv(i, j);
      level = lcm(level, v.get_den());
    }
  return {lattice.determinant(), to_int64(level)};
}

// ---------------------------------------------------------------------------
// Discriminant group

CosetClass coset_of(const IntegerLattice& lattice, const DualVector& v) {
  RationalVector reduced(v.size());
  Integer order = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    reduced(i) = mod(v.coords()(i), 1);
    order = lcm(order, reduced(i).get_den());
  }
  CosetClass c;
  c.representative = DualVector::from_coords(lattice, reduced);
  c.order = to_int64(order);
  c.norm_mod_2 = mod(c.representative.norm(), 2);
  return c;
}

CosetClass trivial_coset(const IntegerLattice& lattice) { return coset_of(lattice, DualVector::zero(lattice)); }

std::vector<CosetClass> discriminant_group(const IntegerLattice& lattice) {
  constexpr long kMaxGroupOrder = 1'000'000;
  if (lattice.determinant() > kMaxGroupOrder)
    throw std::domain_error("discriminant group too large to list: " + lattice.determinant().get_str());

  // left * G * right = D  =>  G^{-1} Z^r = right * D^{-1} Z^r.
  const SmithForm snf = smith_normal_form(lattice.gram());
  struct Generator {
    RationalVector coords;
    std::int64_t order;
  };
  std::vector<Generator> gens;
  for (Eigen::Index i = 0; i < snf.diagonal.rows(); ++i) {
    const std::int64_t d = snf.diagonal(i, i);
    if (d == 1) continue;
    RationalVector g(lattice.rank());
    for (Eigen::Index j = 0; j < lattice.rank(); ++j) g(j) = make_rational(snf.right(j, i), d);
    gens.push_back({std::move(g), d});
  }

  std::vector<CosetClass> out;
  std::vector<std::int64_t> digits(gens.size(), 0);
  while (true) {
    RationalVector x = RationalVector::Zero(lattice.rank());
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (digits[k] != 0) x += gens[k].coords * Rational(digits[k]);
    out.push_back(coset_of(lattice, DualVector::from_coords(lattice, x)));

    std::size_t k = 0;
    while (k < gens.size() && ++digits[k] == gens[k].order) digits[k++] = 0;
    if (k == gens.size()) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Counting functions

std::int64_t count_roots(const IntegerLattice& lattice) {
  return count_vectors(lattice, trivial_coset(lattice), 2);
}

std::int64_t count_R_mu(const IntegerLattice& lattice, const RationalVector& mu0_half) {
  if (mu0_half.size() != lattice.rank()) throw std::invalid_argument("mu0/2 has the wrong size");
  for (Eigen::Index i = 0; i < mu0_half.size(); ++i)
    if (!is_integer(mu0_half(i) * 2)) throw std::invalid_argument("mu0/2 is not half a lattice vector");
  DualVector offset;
  try {
    offset = DualVector::from_coords(lattice, mu0_half);
  } catch (const std::invalid_argument&) {
    return 0;  // the coset L + mu0/2 misses the dual lattice entirely
  }
  // s in L + mu0/2 forces 2s in L; (2s, 2s) = 2 means (s, s) = 1/2.
  return count_vectors(lattice, coset_of(lattice, offset), make_rational(1, 2));
}

std::int64_t count_C_gamma(const IntegerLattice& lattice, const CosetClass& gamma, int p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  return count_vectors(lattice, gamma, make_rational(2, p));
}

// ---------------------------------------------------------------------------
// Reflective data

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ReflectiveKind ReflectiveKind::prime_level(int p) {
  if (!is_prime(p)) throw std::invalid_argument("prime_level needs a prime p");
  return {Type::prime_level, p};
}

Rational ReflectiveKind::singular_discriminant() const {
  return type == Type::two_reflective ? make_rational(-1, 2) : make_rational(-2, p);
}

Rational ReflectiveKind::class_norm() const {
  return type == Type::two_reflective ? make_rational(1, 2) : make_rational(2, p);
}

std::string ReflectiveKind::name() const {
  return type == Type::two_reflective ? "two-reflective" : "prime-level(" + std::to_string(p) + ")";
}

std::vector<CosetClass> reflective_classes(const IntegerLattice& lattice, const ReflectiveKind& kind) {
  std::vector<CosetClass> out;
  const Rational target = mod(kind.class_norm(), 2);
  for (const CosetClass& c : discriminant_group(lattice)) {
    if (c.is_trivial() || c.norm_mod_2 != target) continue;
    if (kind.type == ReflectiveKind::Type::two_reflective && c.order != 2) continue;
    out.push_back(c);
  }
  return out;
}

ReflectiveVectorReport reflection_check(const IntVector& v, const IntMatrix& ambient_gram, const Rational& norm) {
  if (ambient_gram.rows() != ambient_gram.cols() || ambient_gram.rows() != v.size())
    throw std::invalid_argument("vector and ambient Gram matrix disagree in size");
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v(i));
  if (g != 1) throw std::invalid_argument("vector is not primitive");

  const IntVector pairing = ambient_gram * v;
  const Rational actual(static_cast<long>(v.dot(pairing)));
  if (actual != norm) throw std::invalid_argument("declared norm does not match (v, v)");
  if (norm >= 0 || !is_integer(norm / 2)) throw std::invalid_argument("norm must be of the form -2d with d > 0");
  const std::int64_t d = to_int64(Rational(-norm / 2).get_num());

  std::int64_t div = 0;
  for (Eigen::Index i = 0; i < pairing.size(); ++i) div = std::gcd(div, pairing(i));

  ReflectiveVectorReport report;
  report.vector = v;
  report.norm = norm;
  report.div = div;
  report.is_reflective = div == d || div == 2 * d;
  return report;
}

}  // namespace refl
