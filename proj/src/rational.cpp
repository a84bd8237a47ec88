#include "refl/rational.hpp"

#include <limits>
#include <stdexcept>

namespace refl {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational out;
  if (out.set_str(s, 10) != 0 || out.get_den() == 0) throw std::invalid_argument("malformed rational: " + s);
  out.canonicalize();
  return out;
}

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

}  // namespace refl
