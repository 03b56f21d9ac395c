// The inversion symmetry of WDVV: a rational change of variables and
// potential that maps solutions to solutions, flipping the charge d -> 2-d.
#pragma once

#include "wdvv/frobenius.hpp"

#include <map>
#include <string>

namespace wdvv {

// Hat coordinates as rational functions of v:
//   vhat^1 = (1/2) eta_{ab} v^a v^b / v^n,  vhat^i = v^i / v^n,
//   vhat^n = -1 / v^n.
std::map<std::string, RationalFunction> inversion_forward(const FrobeniusSolution& s);

// v as rational functions of the hat coordinates (written with the same
// variable names): components 1 and n obey the same formulas, the middle
// ones pick up a sign, v^i = -vhat^i / vhat^n.
std::map<std::string, RationalFunction> inversion_backward(const FrobeniusSolution& s);

// d -> 2-d; mu_1 -> d/2-1, mu_n -> 1-d/2, middle entries unchanged.
Spectrum inverted_spectrum(const FrobeniusSolution& s);

// The transformed solution
//   Fhat = (v^n)^{-2} (F - (1/2) eta_{ab} v^1 v^a v^b)  composed with the
// backward map; validated on construction.
FrobeniusSolution invert_solution(const FrobeniusSolution& s);

// Equality of potentials modulo at-most-quadratic terms, decided on the
// structure constants c_{abg}.
bool same_up_to_quadratic(const FrobeniusSolution& a, const FrobeniusSolution& b);

}  // namespace wdvv
