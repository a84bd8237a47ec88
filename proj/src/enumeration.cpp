// Fincke-Pohst enumeration. The Gram matrix is decomposed once into pivots
// and multipliers (see quadratic_decomposition); the search walks coordinates
// from last to first in floating point with a small slack on the bound, and
// every candidate is then accepted or rejected by an exact integer norm test,
// so no vector is lost or invented by rounding.

#include "refl/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace refl {

namespace {

class Enumerator {
 public:
  Enumerator(const RationalMatrix& q, const RationalVector& offset, const Rational& bound)
      : q_(q.rows(), q.cols()), n_(q.rows()), x_(n_), y_(n_), offset_(n_) {
    for (Eigen::Index i = 0; i < n_; ++i) {
      offset_(i) = offset(i).get_d();
      for (Eigen::Index j = 0; j < n_; ++j) q_(i, j) = q(i, j).get_d();
    }
    bound_ = bound.get_d();
    slack_ = 1e-9 * (1.0 + std::abs(bound_));
  }

  /// Integer vectors x with Q(offset + x) <= bound, plus possibly a few
  /// candidates just above it.
  std::vector<IntVector> run() {
    if (bound_ < -slack_) return {};
    if (n_ == 0) return {IntVector(0)};
    descend(n_ - 1, bound_);
    return std::move(out_);
  }

 private:
  void descend(Eigen::Index i, double remaining) {
    double center = 0;
    for (Eigen::Index j = i + 1; j < n_; ++j) center -= q_(i, j) * y_(j);
    const double shift = center - offset_(i);
    const double r = std::sqrt(std::max(0.0, remaining + slack_) / q_(i, i));
    const long lo = static_cast<long>(std::ceil(shift - r - 1e-9));
    const long hi = static_cast<long>(std::floor(shift + r + 1e-9));
    for (long x = lo; x <= hi; ++x) {
      const double t = static_cast<double>(x) - shift;
      const double rest = remaining - q_(i, i) * t * t;
      if (rest < -slack_) continue;
      x_(i) = x;
      y_(i) = offset_(i) + static_cast<double>(x);
      if (i == 0) {
        out_.push_back(x_);
      } else {
        descend(i - 1, rest);
      }
    }
  }

  Eigen::MatrixXd q_;
  Eigen::Index n_;
  IntVector x_;
  Eigen::VectorXd y_;
  Eigen::VectorXd offset_;
  double bound_ = 0;
  double slack_ = 0;
  std::vector<IntVector> out_;
};

std::vector<DualVector> sorted(std::vector<DualVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<DualVector> enumerate_vectors_up_to(const IntegerLattice& lattice, const DualVector& offset,
                                                const Rational& bound) {
  const RationalVector& c = offset.coords();
  std::vector<DualVector> out;
  for (const IntVector& x : Enumerator(lattice.decomposition(), c, bound).run()) {
    // pairing(c + x) = pairing(c) + G x, all integral.
    const IntVector pairing = offset.pairing() + lattice.gram() * x;
    if (lattice.norm_from_pairing(pairing) <= bound) out.push_back(DualVector::from_pairing(lattice, pairing));
  }
  return sorted(std::move(out));
}

std::int64_t count_vectors(const IntegerLattice& lattice, const CosetClass& coset, const Rational& norm) {
  if (norm < 0) throw std::invalid_argument("norm must be nonnegative");
  const DualVector& offset = coset.representative;
  std::int64_t count = 0;
  for (const IntVector& x : Enumerator(lattice.decomposition(), offset.coords(), norm).run())
    if (lattice.norm_from_pairing(offset.pairing() + lattice.gram() * x) == norm) ++count;
  return count;
}

std::vector<DualVector> enumerate_vectors(const IntegerLattice& lattice, const CosetClass& coset,
                                          const Rational& norm) {
  if (norm < 0) throw std::invalid_argument("norm must be nonnegative");
  std::vector<DualVector> all = enumerate_vectors_up_to(lattice, coset.representative, norm);
  std::erase_if(all, [&](const DualVector& v) { return v.norm() != norm; });
  return all;
}

std::vector<DualVector> enumerate_dual_up_to(const IntegerLattice& lattice, const Rational& bound) {
  // In the dual basis the dual lattice is Z^r with Gram G^{-1}, and the
  // dual-basis coordinates are exactly the pairing vector.
  const RationalVector origin = RationalVector::Zero(lattice.rank());
  std::vector<DualVector> out;
  for (const IntVector& w : Enumerator(lattice.dual_decomposition(), origin, bound).run()) {
    if (w.isZero() || lattice.norm_from_pairing(w) > bound) continue;
    out.push_back(DualVector::from_pairing(lattice, w));
  }
  return sorted(std::move(out));
}

std::vector<DualVector> minimal_dual_vectors(const IntegerLattice& lattice) {
  if (lattice.rank() == 0) return {};
  // The smallest diagonal entry of G^{-1} is the norm of a nonzero dual
  // vector, so it bounds the minimum from above.
  Rational bound = lattice.inverse_gram()(0, 0);
  for (Eigen::Index i = 1; i < lattice.rank(); ++i) bound = std::min(bound, Rational(lattice.inverse_gram()(i, i)));
  std::vector<DualVector> all = enumerate_dual_up_to(lattice, bound);
  Rational minimum = bound;
  for (const DualVector& v : all) minimum = std::min(minimum, v.norm());
  std::erase_if(all, [&](const DualVector& v) { return v.norm() != minimum; });
  return all;
}

}  // namespace refl
