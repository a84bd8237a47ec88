#include "refl/jacobi.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace refl {

std::string to_string(HolomorphyClass c) {
  switch (c) {
    case HolomorphyClass::weakly_holomorphic:
      return "weakly-holomorphic";
    case HolomorphyClass::weak:
      return "weak";
    case HolomorphyClass::holomorphic:
      return "holomorphic";
  }
  return "unknown";
}

FourierKey make_key(int n, const IntVector& pairing) {
  FourierKey key;
  key.n = n;
  key.l.assign(pairing.data(), pairing.data() + pairing.size());
  return key;
}

IntVector pairing_of(const FourierKey& key) {
  IntVector v(static_cast<Eigen::Index>(key.l.size()));
  for (std::size_t i = 0; i < key.l.size(); ++i) v(static_cast<Eigen::Index>(i)) = key.l[i];
  return v;
}

// ---------------------------------------------------------------------------
// JacobiExpansion

JacobiExpansion::JacobiExpansion(IntegerLattice index, Rational weight, int valuation, int trunc)
    : index_(std::move(index)), weight_(std::move(weight)), valuation_(valuation), trunc_(trunc) {
  weight_.canonicalize();
  if (trunc_ < valuation_) throw std::invalid_argument("JacobiExpansion: truncation below valuation");
  if (!is_integer(weight_ * 2)) throw std::invalid_argument("JacobiExpansion: weight must be in (1/2)Z");
}

JacobiExpansion JacobiExpansion::from_scalar(const QSeries& f) {
  if (!f.weight()) throw std::invalid_argument("from_scalar: the series carries no weight");
  JacobiExpansion out(IntegerLattice(), *f.weight(), f.valuation(), f.trunc());
  for (const auto& [n, c] : f.coeffs()) out.add(n, IntVector(0), c);
  return out;
}

Rational JacobiExpansion::coefficient(const FourierKey& key) const {
  if (key.n >= trunc_)
    throw std::out_of_range("JacobiExpansion: q^" + std::to_string(key.n) + " is beyond the truncation");
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational JacobiExpansion::coefficient(int n, const IntVector& pairing) const {
  return coefficient(make_key(n, pairing));
}

void JacobiExpansion::add(const FourierKey& key, const Rational& c) {
  if (!in_window(key.n)) throw std::out_of_range("JacobiExpansion: exponent outside the window");
  if (static_cast<Eigen::Index>(key.l.size()) != rank())
    throw std::invalid_argument("JacobiExpansion: pairing vector has the wrong size");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void JacobiExpansion::add(int n, const IntVector& pairing, const Rational& c) { add(make_key(n, pairing), c); }

DualVector JacobiExpansion::dual_vector(const FourierKey& key) const {
  return DualVector::from_pairing(index_, pairing_of(key));
}

Rational JacobiExpansion::norm(const FourierKey& key) const { return index_.norm_from_pairing(pairing_of(key)); }

Rational JacobiExpansion::hyperbolic_norm(const FourierKey& key) const { return Rational(2 * key.n) - norm(key); }

JacobiExpansion JacobiExpansion::truncated(int trunc) const {
  if (trunc > trunc_) throw std::invalid_argument("JacobiExpansion: cannot extend a truncation");
  JacobiExpansion out(index_, weight_, valuation_, std::max(trunc, valuation_));
  for (const auto& [key, c] : terms_) {
    if (key.n >= out.trunc_) break;
    out.terms_.emplace_hint(out.terms_.end(), key, c);
  }
  return out;
}

JacobiExpansion JacobiExpansion::with_weight(const Rational& weight) const {
  JacobiExpansion out = *this;
  out.weight_ = weight;
  out.weight_.canonicalize();
  return out;
}

JacobiExpansion operator+(const JacobiExpansion& a, const JacobiExpansion& b) {
  if (!(a.index_ == b.index_)) throw std::invalid_argument("JacobiExpansion sum: index lattices differ");
  if (a.weight_ != b.weight_) throw std::invalid_argument("JacobiExpansion sum: weights differ");
  JacobiExpansion out(a.index_, a.weight_, std::min(a.valuation_, b.valuation_), std::min(a.trunc_, b.trunc_));
  for (const auto& [key, c] : a.terms_)
    if (key.n < out.trunc_) out.add(key, c);
  for (const auto& [key, c] : b.terms_)
    if (key.n < out.trunc_) out.add(key, c);
  return out;
}

JacobiExpansion operator-(const JacobiExpansion& a, const JacobiExpansion& b) { return a + Rational(-1) * b; }

JacobiExpansion operator*(const Rational& s, const JacobiExpansion& f) {
  JacobiExpansion out(f.index_, f.weight_, f.valuation_, f.trunc_);
  if (s == 0) return out;
  for (const auto& [key, c] : f.terms_) out.terms_.emplace_hint(out.terms_.end(), key, s * c);
  return out;
}

bool operator==(const JacobiExpansion& a, const JacobiExpansion& b) {
  return a.index_ == b.index_ && a.weight_ == b.weight_ && a.valuation_ == b.valuation_ && a.trunc_ == b.trunc_ &&
         a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Constructions

JacobiExpansion theta_series(const IntegerLattice& lattice, int N) {
  if (N < 1) throw std::invalid_argument("theta_series: N must be at least 1");
  JacobiExpansion out(lattice, Rational(static_cast<long>(lattice.rank()), 2), 0, N);
  const DualVector origin = DualVector::zero(lattice);
  for (const DualVector& v : enumerate_vectors_up_to(lattice, origin, Rational(2 * (N - 1)))) {
    const Rational half = v.norm() / 2;
    out.add(static_cast<int>(half.get_num().get_si()), v.pairing(), 1);
  }
  return out;
}

JacobiExpansion mul_scalar(const JacobiExpansion& phi, const QSeries& f) {
  if (!f.weight()) throw std::invalid_argument("mul_scalar: the scalar series carries no weight");
  const int valuation = phi.valuation() + f.valuation();
  const int trunc = std::min(phi.trunc() + f.valuation(), f.trunc() + phi.valuation());
  if (trunc < 1) throw std::domain_error("mul_scalar: the product has no q^0 layer left");
  JacobiExpansion out(phi.index(), phi.weight() + *f.weight(), valuation, std::max(trunc, valuation));
  for (const auto& [key, c] : phi.terms()) {
    for (const auto& [m, d] : f.coeffs()) {
      const int n = key.n + m;
      if (n >= out.trunc()) break;
      FourierKey k{n, key.l};
      out.add(k, c * d);
    }
  }
  return out;
}

JacobiExpansion tensor(const JacobiExpansion& a, const JacobiExpansion& b) {
  const int valuation = a.valuation() + b.valuation();
  const int trunc = std::min(a.trunc() + b.valuation(), b.trunc() + a.valuation());
  JacobiExpansion out(direct_sum(a.index(), b.index()), a.weight() + b.weight(), valuation,
                      std::max(trunc, valuation));
  FourierKey k;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      k.n = ka.n + kb.n;
      if (k.n >= out.trunc()) break;
      k.l = ka.l;
      k.l.insert(k.l.end(), kb.l.begin(), kb.l.end());
      out.add(k, ca * cb);
    }
  }
  return out;
}

JacobiExpansion product(const JacobiExpansion& a, const JacobiExpansion& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("product: index lattices have different ranks");
  const int valuation = a.valuation() + b.valuation();
  const int trunc = std::min(a.trunc() + b.valuation(), b.trunc() + a.valuation());
  IntegerLattice index(a.index().gram() + b.index().gram());
  JacobiExpansion out(index, a.weight() + b.weight(), valuation, std::max(trunc, valuation));
  FourierKey k;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      k.n = ka.n + kb.n;
      if (k.n >= out.trunc()) break;
      k.l = ka.l;
      for (std::size_t i = 0; i < k.l.size(); ++i) k.l[i] += kb.l[i];
      out.add(k, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Differential operators and identities

JacobiExpansion heat_H(const JacobiExpansion& phi) {
  JacobiExpansion out(phi.index(), phi.weight() + 2, phi.valuation(), phi.trunc());
  for (const auto& [key, c] : phi.terms()) out.add(key, phi.hyperbolic_norm(key) * c / 2);
  return out;
}

JacobiExpansion heat_Hk(const JacobiExpansion& phi, const Rational& k) {
  if (k != phi.weight()) throw std::invalid_argument("heat_Hk: k must equal the weight of the input");
  const QSeries g2 = eisenstein(EisensteinKind::G2, std::max(1, phi.trunc() - phi.valuation()));
  const Rational factor = 2 * k - Rational(static_cast<long>(phi.rank()));
  return heat_H(phi) + factor * mul_scalar(phi, g2);
}

Rational gritsenko_residual(const JacobiExpansion& phi) {
  if (phi.weight() != 0) throw std::invalid_argument("gritsenko_residual: weight must be 0");
  if (phi.pole_order() > 1) throw std::invalid_argument("gritsenko_residual: pole order exceeds 1");
  if (phi.rank() == 0) throw std::invalid_argument("gritsenko_residual: index has rank 0");
  if (phi.trunc() < 1) throw std::invalid_argument("gritsenko_residual: q^0 layer is not available");

  Rational a = 0, sum = 0, weighted = 0;
  for (const auto& [key, c] : phi.terms()) {
    if (key.n == -1) {
      if (std::any_of(key.l.begin(), key.l.end(), [](std::int64_t x) { return x != 0; }))
        throw std::invalid_argument("gritsenko_residual: q^-1 layer must be supported at l = 0");
      a = c;
    } else if (key.n == 0) {
      sum += c;
      weighted += c * phi.norm(key);
    } else if (key.n > 0) {
      break;
    }
  }
  return sum - Rational(12) / Rational(static_cast<long>(phi.rank())) * weighted - 24 * a;
}

std::vector<SingularTerm> singular_part(const JacobiExpansion& phi) {
  std::vector<SingularTerm> out;
  for (const auto& [key, c] : phi.terms()) {
    const Rational h = phi.hyperbolic_norm(key);
    if (h < 0) out.push_back({key.n, phi.dual_vector(key), h, c});
  }
  std::stable_sort(out.begin(), out.end(), [](const SingularTerm& a, const SingularTerm& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.l < b.l;
  });
  return out;
}

HolomorphyClass classify(const JacobiExpansion& phi) {
  bool singular = false;
  for (const auto& [key, c] : phi.terms()) {
    if (key.n < 0) return HolomorphyClass::weakly_holomorphic;
    if (!singular && phi.hyperbolic_norm(key) < 0) singular = true;
  }
  return singular ? HolomorphyClass::weak : HolomorphyClass::holomorphic;
}

QSeries specialize_zero(const JacobiExpansion& phi) {
  if (!is_integer(phi.weight())) throw std::invalid_argument("specialize_zero: weight is not integral");
  QSeries out(phi.valuation(), phi.trunc(), static_cast<int>(phi.weight().get_num().get_si()));
  std::map<int, Rational> sums;
  for (const auto& [key, c] : phi.terms()) sums[key.n] += c;
  for (const auto& [n, c] : sums) out.set(n, c);
  return out;
}

namespace {

std::string describe(const JacobiExpansion& phi, const FourierKey& key) {
  std::ostringstream s;
  s << "(n=" << key.n << ", l=[";
  const RationalVector coords = phi.index().coords_from_pairing(pairing_of(key));
  for (Eigen::Index i = 0; i < coords.size(); ++i) s << (i ? "," : "") << to_short_string(coords(i));
  s << "])";
  return s.str();
}

}  // namespace

std::vector<std::string> elliptic_invariance_violations(const JacobiExpansion& phi) {
  std::vector<std::string> out;
  const IntMatrix& g = phi.index().gram();
  for (const auto& [key, c] : phi.terms()) {
    for (Eigen::Index i = 0; i < phi.rank(); ++i) {
      for (int sign : {1, -1}) {
        // x = sign * e_i:  (l, x) = sign * l_i,  (x, x) = G_ii
        const std::int64_t shift = sign * key.l[static_cast<std::size_t>(i)] + g(i, i) / 2;
        FourierKey target{key.n + static_cast<int>(shift), key.l};
        if (!phi.in_window(target.n)) continue;
        for (Eigen::Index j = 0; j < phi.rank(); ++j) target.l[static_cast<std::size_t>(j)] += sign * g(j, i);
        if (phi.coefficient(target) != c)
          out.push_back(describe(phi, key) + " -> " + describe(phi, target));
      }
    }
  }
  return out;
}

std::vector<std::string> parity_violations(const JacobiExpansion& phi) {
  if (!is_integer(phi.weight())) throw std::invalid_argument("parity_violations: weight is not integral");
  const bool odd = phi.weight().get_num().get_si() % 2 != 0;
  std::vector<std::string> out;
  for (const auto& [key, c] : phi.terms()) {
    FourierKey neg{key.n, key.l};
    for (auto& x : neg.l) x = -x;
    const Rational expected = odd ? Rational(-c) : c;
    if (phi.coefficient(neg) != expected) out.push_back(describe(phi, key));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text serialization

void write_text(std::ostream& out, const JacobiExpansion& phi) {
  out << "# weight " << to_short_string(phi.weight()) << "\n";
  out << "# window " << phi.valuation() << " " << phi.trunc() << "\n";
  out << "# rank " << phi.rank() << "\n";

  struct Row {
    int n;
    DualVector l;
    const Rational* c;
  };
  std::vector<Row> rows;
  rows.reserve(phi.size());
  for (const auto& [key, c] : phi.terms()) rows.push_back({key.n, phi.dual_vector(key), &c});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.l < b.l;
  });
  for (const Row& r : rows) {
    out << r.n << '\t';
    for (Eigen::Index i = 0; i < r.l.size(); ++i) out << (i ? "," : "") << to_short_string(r.l.coords()(i));
    out << '\t' << to_fraction_string(*r.c) << '\n';
  }
}

std::string to_text(const JacobiExpansion& phi) {
  std::ostringstream s;
  write_text(s, phi);
  return s.str();
}

JacobiExpansion read_text(std::istream& in, const IntegerLattice& index) {
  Rational weight = 0;
  int valuation = 0, trunc = 0;
  bool have_window = false;
  std::vector<std::pair<int, std::pair<RationalVector, Rational>>> rows;

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream s(line.substr(1));
      std::string field;
      s >> field;
      if (field == "weight") {
        std::string w;
        s >> w;
        weight = parse_rational(w);
      } else if (field == "window") {
        s >> valuation >> trunc;
        have_window = true;
      } else if (field == "rank") {
        Eigen::Index r = -1;
        s >> r;
        if (r != index.rank()) throw std::invalid_argument("read_text: rank does not match the index lattice");
      }
      continue;
    }
    const auto tab1 = line.find('\t');
    const auto tab2 = line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos)
      throw std::invalid_argument("read_text: malformed line: " + line);
    const int n = std::stoi(line.substr(0, tab1));
    const std::string coord_text = line.substr(tab1 + 1, tab2 - tab1 - 1);
    RationalVector coords(index.rank());
    std::istringstream cs(coord_text);
    std::string item;
    Eigen::Index i = 0;
    while (std::getline(cs, item, ',')) {
      if (i >= index.rank()) throw std::invalid_argument("read_text: too many coordinates");
      coords(i++) = parse_rational(item);
    }
    if (i != index.rank()) throw std::invalid_argument("read_text: too few coordinates");
    rows.push_back({n, {coords, parse_rational(line.substr(tab2 + 1))}});
  }
  if (!have_window) throw std::invalid_argument("read_text: missing '# window' line");

  JacobiExpansion out(index, weight, valuation, trunc);
  for (const auto& [n, payload] : rows)
    out.add(n, DualVector::from_coords(index, payload.first).pairing(), payload.second);
  return out;
}

}  // namespace refl
