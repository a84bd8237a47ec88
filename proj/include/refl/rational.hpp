#pragma once

// Exact scalar types shared by every module, plus the Eigen glue that lets
// Eigen containers hold them.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>

namespace refl {

using Integer = mpz_class;
using Rational = mpq_class;

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer floor(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

inline Integer ceil(const Rational& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// x reduced into [0, m).
inline Rational mod(const Rational& x, const Rational& m) {
  Rational q = x / m;
  return x - m * Rational(floor(q));
}

/// Always "num/den", including den == 1. Used by every text and JSON renderer.
inline std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// "num" when integral, "num/den" otherwise.
inline std::string to_short_string(const Rational& x) {
  return is_integer(x) ? x.get_num().get_str() : to_fraction_string(x);
}

/// Accepts "a", "-a", "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::int64_t to_int64(const Integer& x);

}  // namespace refl

namespace Eigen {

template <>
struct NumTraits<refl::Rational> : GenericNumTraits<refl::Rational> {
  using Real = refl::Rational;
  using NonInteger = refl::Rational;
  using Nested = refl::Rational;
  using Literal = refl::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
