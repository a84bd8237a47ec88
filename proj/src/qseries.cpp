#include "refl/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace refl {

QSeries::QSeries(int valuation, int trunc, std::optional<int> weight)
    : valuation_(valuation), trunc_(trunc), weight_(weight) {
  if (trunc < valuation) throw std::invalid_argument("QSeries: truncation below valuation");
}

Rational QSeries::operator[](int n) const {
  if (n >= trunc_) throw std::out_of_range("QSeries: coefficient q^" + std::to_string(n) + " is beyond the truncation");
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void QSeries::set(int n, const Rational& value) {
  if (n < valuation_ || n >= trunc_) throw std::out_of_range("QSeries: exponent outside the window");
  if (value == 0) {
    coeffs_.erase(n);
  } else {
    coeffs_[n] = value;
  }
}

QSeries QSeries::truncated(int trunc) const {
  if (trunc > trunc_) throw std::invalid_argument("QSeries: cannot extend a truncation");
  QSeries out(valuation_, std::max(trunc, valuation_), weight_);
  for (const auto& [n, c] : coeffs_)
    if (n < out.trunc_) out.coeffs_.emplace(n, c);
  return out;
}

QSeries QSeries::with_weight(std::optional<int> weight) const {
  QSeries out = *this;
  out.weight_ = weight;
  return out;
}

QSeries QSeries::reciprocal() const {
  const Rational lead = (*this)[valuation_];
  if (lead == 0) throw std::domain_error("QSeries: reciprocal needs a nonzero leading coefficient");
  const int precision = trunc_ - valuation_;  // relative precision of the unit part
  std::vector<Rational> unit(precision), inv(precision);
  for (int i = 0; i < precision; ++i) unit[i] = (*this)[valuation_ + i] / lead;
  inv[0] = 1;
  for (int i = 1; i < precision; ++i) {
    Rational acc = 0;
    for (int j = 1; j <= i; ++j) acc += unit[j] * inv[i - j];
    inv[i] = -acc;
  }
  std::optional<int> w;
  if (weight_) w = -*weight_;
  QSeries out(-valuation_, -valuation_ + precision, w);
  for (int i = 0; i < precision; ++i) out.set(-valuation_ + i, inv[i] / lead);
  return out;
}

QSeries QSeries::pow(unsigned exponent) const {
  QSeries out(0, trunc_ - valuation_, weight_ ? std::optional<int>(0) : std::nullopt);
  out.set(0, 1);
  QSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1u) out = out * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  std::optional<int> w = a.weight_ == b.weight_ ? a.weight_ : std::nullopt;
  QSeries out(std::min(a.valuation_, b.valuation_), std::min(a.trunc_, b.trunc_), w);
  for (const auto& [n, c] : a.coeffs_)
    if (n < out.trunc_) out.coeffs_[n] += c;
  for (const auto& [n, c] : b.coeffs_)
    if (n < out.trunc_) out.coeffs_[n] += c;
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + Rational(-1) * b; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  std::optional<int> w;
  if (a.weight_ && b.weight_) w = *a.weight_ + *b.weight_;
  const int trunc = std::min(a.trunc_ + b.valuation_, b.trunc_ + a.valuation_);
  QSeries out(a.valuation_ + b.valuation_, std::max(trunc, a.valuation_ + b.valuation_), w);
  for (const auto& [n, c] : a.coeffs_)
    for (const auto& [m, d] : b.coeffs_) {
      if (n + m >= out.trunc_) break;
      out.coeffs_[n + m] += c * d;
    }
  std::erase_if(out.coeffs_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

QSeries operator*(const Rational& s, const QSeries& f) {
  QSeries out(f.valuation_, f.trunc_, f.weight_);
  if (s == 0) return out;
  for (const auto& [n, c] : f.coeffs_) out.coeffs_.emplace(n, s * c);
  return out;
}

Integer divisor_sigma(int k, int n) {
  Integer total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    total += p;
  }
  return total;
}

QSeries eisenstein(EisensteinKind kind, int N) {
  if (N < 1) throw std::invalid_argument("eisenstein: N must be at least 1");
  int k = 0;
  Rational constant, factor;
  switch (kind) {
    case EisensteinKind::G2:
      k = 1;
      constant = make_rational(-1, 24);
      factor = 1;
      break;
    case EisensteinKind::E4:
      k = 3;
      constant = 1;
      factor = 240;
      break;
    case EisensteinKind::E6:
      k = 5;
      constant = 1;
      factor = -504;
      break;
  }
  QSeries out(0, N, k + 1);
  out.set(0, constant);
  for (int n = 1; n < N; ++n) out.set(n, factor * Rational(divisor_sigma(k, n)));
  return out;
}

QSeries delta(int N, bool inverse) {
  if (N < 1) throw std::invalid_argument("delta: N must be at least 1");
  // 1/Delta loses two orders of relative precision (valuation 1).
  const int work = inverse ? N + 2 : N;
  QSeries euler(0, std::max(work - 1, 1));
  euler.set(0, 1);
  for (int n = 1; n < euler.trunc(); ++n) {
    QSeries factor(0, euler.trunc());
    factor.set(0, 1);
    factor.set(n, -1);
    euler = euler * factor;
  }
  const QSeries p24 = euler.pow(24);
  QSeries out(1, work, 12);
  for (const auto& [n, c] : p24.coeffs())
    if (n + 1 < work) out.set(n + 1, c);
  if (!inverse) return out;
  QSeries inv = out.reciprocal();
  return inv.truncated(N);
}

}  // namespace refl
