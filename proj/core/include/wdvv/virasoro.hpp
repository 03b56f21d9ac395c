// The two lowest Virasoro constraints for the hierarchy's tau function,
// assembled from the spectrum and the calibration's R matrices.
//
//   L_{-1}: sum_{p>=1} ttilde^{a,p} d/dt^{a,p-1}
//           + (1/2) eta_{ab} ttilde^{a,0} ttilde^{b,0},
//   L_0:    sum (p + 1/2 + mu_a) ttilde^{a,p} d/dt^{a,p}
//           + sum_r ttilde^{a,p} (R_r)^b_a d/dt^{b,p-r}
//           + (1/2) (-1)^q (R_{p+q+1})^x_a eta_{xb} ttilde^{a,p} ttilde^{b,q}
//           + c0,   c0 = (1/4) sum_a (1/4 - mu_a^2).
//
// Genus-zero residual: (L tau)/tau with d log tau / d t^{a,p} given by the
// Omega table; the constant c0 is carried on the operator but enters no
// genus-zero residual.
#pragma once

#include "wdvv/hierarchy.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace wdvv {

std::string time_var(int alpha, int p);  // "t{alpha}_{p}"

struct VirasoroOperator {
  int m = 0;
  // (from, to, c): term  c * ttilde^{from} * d/dt^{to}
  std::vector<std::tuple<TimeIndex, TimeIndex, Scalar>> linear;
  // (i, j, c): term  c * ttilde^{i} * ttilde^{j}
  std::vector<std::tuple<TimeIndex, TimeIndex, Scalar>> quadratic;
  Scalar c0{0};
};

// Terms are enumerated for all alpha and p <= max_level.
VirasoroOperator virasoro_operator(const FrobeniusSolution& s, const Calibration& cal,
                                   int m, int max_level);

// Applies L to a polynomial in the shifted-time variables time_var(a,p).
Polynomial virasoro_apply(const VirasoroOperator& L, const Polynomial& f);

// [L_{-1}, L_0] + L_{-1} == 0 on all monomials of degree <= 2 in the times
// with level < P. Exact.
bool check_virasoro_commutator(const FrobeniusSolution& s, const Calibration& cal,
                               int P, std::string* why = nullptr);

// Genus-zero residual at the hodograph point v for the setup h (c0 omitted).
double virasoro_residual(const FrobeniusSolution& s, const OmegaTable& om,
                         const HodographSetup& h, const VirasoroOperator& L,
                         const std::vector<double>& v);

}  // namespace wdvv
