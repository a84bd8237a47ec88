#pragma once

// Truncated Laurent series in q with exact rational coefficients.

#include "refl/rational.hpp"

#include <map>
#include <optional>

namespace refl {

/// Coefficients are known exactly for valuation <= n < trunc and are zero
/// below the valuation. Arithmetic never extends the known window.
class QSeries {
 public:
  QSeries(int valuation, int trunc, std::optional<int> weight = std::nullopt);

  int valuation() const { return valuation_; }
  int trunc() const { return trunc_; }
  const std::optional<int>& weight() const { return weight_; }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  /// Throws std::out_of_range for n >= trunc.
  Rational operator[](int n) const;
  void set(int n, const Rational& value);

  QSeries truncated(int trunc) const;
  QSeries with_weight(std::optional<int> weight) const;
  /// 1/f. The leading coefficient at the valuation must be nonzero; the
  /// result is known up to trunc - 2 * valuation.
  QSeries reciprocal() const;
  QSeries pow(unsigned exponent) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& s, const QSeries& f);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  int valuation_;
  int trunc_;
  std::optional<int> weight_;
  std::map<int, Rational> coeffs_;
};

enum class EisensteinKind { G2, E4, E6 };

/// G2 = -1/24 + sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n,
/// E6 = 1 - 504 sum sigma_5(n) q^n; coefficients for exponents < N.
QSeries eisenstein(EisensteinKind kind, int N);

/// Delta = q prod (1 - q^n)^24, or its reciprocal q^{-1} + 24 + ... ; both
/// known for exponents < N.
QSeries delta(int N, bool inverse = false);

/// sum_{d | n} d^k
Integer divisor_sigma(int k, int n);

}  // namespace refl
