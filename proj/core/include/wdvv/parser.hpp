// Expression parser shared by the solution/calibration file readers and the
// CLI: + - * / ^ ( ), integer and rational literals, named variables, and
// log(...) in jet mode.
#pragma once

#include "wdvv/jet.hpp"

#include <string>

namespace wdvv {

// Full grammar including log(...).
JetExpr parse_jet(const std::string& text);

// Same grammar without log; throws on log or on a genuinely transcendental
// construct.
RationalFunction parse_rational(const std::string& text);

// parse_rational + requires a polynomial (constant denominators are folded in).
Polynomial parse_polynomial(const std::string& text);

}  // namespace wdvv
