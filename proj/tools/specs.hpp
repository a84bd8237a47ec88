#pragma once

// Parsers for the two small input languages of the command line:
//   lattice names   "2E8+A1", "D4", "A2+<6>", "3A1"
//   form specs      "E4*E41 x thetaE8 / Delta", "thetaL(D4)"

#include "refl/jacobi.hpp"

#include <string>
#include <variant>

namespace refl::cli {

/// Sum of terms [count]name, name one of E8, An, Dn or <2k> (rank one).
/// Throws UsageError on anything else.
IntegerLattice parse_lattice(const std::string& text);

using FormValue = std::variant<QSeries, JacobiExpansion>;

/// Tokens E4, E6, Delta, G2, phi01, phim21, E41, thetaE8, thetaL(<lattice>);
/// operators '*' (scalar or Gram product), 'x' (tensor) and the postfix
/// '/Delta'; evaluation is left to right and whitespace is ignored. Every
/// factor is built with one extra q-layer per '/Delta' so that the result
/// is known for exponents < trunc.
FormValue evaluate_form(const std::string& spec, int trunc);

}  // namespace refl::cli
