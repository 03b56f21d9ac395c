// Genus-expansion bookkeeping: the genus-one free energy
//   F_1 = (1/24) log det( c_{abg}(v) v^g_x ) + G(v),
// the transformation law of the G-function under inversion,
//   Ghat = G + (n/24 - 1/2) log v^n,
// the determinant identity
//   det( chat(vhat) vhat_xhat ) * (v^n)^n == det( c(v) v_x ),
// and the Legendre-type expansion of the free energy: with
// A = sum_j eps^{2j-2} A_j, A_j = D F_j, the tilde terms solve
//   sum_{g>=1} eps^{2g-2} sum_{k>=0} (1/k!) (eps^2 A)^k Dhat^k Ftilde_g
//     = sum_g eps^{2g-2} F_g
//       - sum_{k>=2} (1/k!) (eps^2 A)^k Dhat^{k-2} vhat^n,
// order by order in eps^2, where vhat^n = -1/v^n and Dhat = (1/v^n) D.
// In particular Ftilde_1 = F_1 and
//   Ftilde_2 = F_2 - (1/(2 v^n)) (D F_1)^2.
#pragma once

#include "wdvv/inversion.hpp"
#include "wdvv/jet.hpp"

#include <map>
#include <string>
#include <vector>

namespace wdvv {

// M_{ab}(v, v_x) = sum_g c_{abg}(v) v^g_x
Mat<RationalFunction> dispersion_matrix(const FrobeniusSolution& s);

// (1/24) log det M + G. Throws if det M is identically zero.
JetExpr genus1_potential(const FrobeniusSolution& s, const JetExpr& G);

// G + (n/24 - 1/2) log v^n, i.e. Ghat written in the original variables.
JetExpr transform_G(const JetExpr& G, int n);

// Substitution maps between the two jet spaces (both sides use the variable
// names v1..vn). hat_jet_map sends a hatted-side expression to the original
// jets via the forward coordinate map and D_xhat = (1/v^n) D_x; unhat_jet_map
// is the inverse direction via the backward map and D_x = (-1/vhat^n) D_xhat.
// Jet variables are prepared up to max_order.
std::map<std::string, RationalFunction> hat_jet_map(const FrobeniusSolution& s,
                                                    int max_order);
std::map<std::string, RationalFunction> unhat_jet_map(const FrobeniusSolution& s,
                                                      int max_order);

// det( dispersion_matrix(invert_solution(s)) pulled back ) * (v^n)^n
//   == det( dispersion_matrix(s) ), exactly.
bool check_det_identity(const FrobeniusSolution& s, std::string* why = nullptr);

// D_xhat( Ftilde_1 - F1hat + (1/2) log vhat^n ) == 0 exactly, where F1hat is
// built from the inverted solution with Ghat = transform_G(G, n).
bool check_genus1_transform(const FrobeniusSolution& s, const JetExpr& G,
                            std::string* why = nullptr);

struct GenusSeries {
  std::vector<JetExpr> terms;  // terms[g-1] = F_g
  int gmax() const { return static_cast<int>(terms.size()); }
  const JetExpr& F(int g) const { return terms.at(g - 1); }
};

// Solves the expansion recursion above for Ftilde_1..Ftilde_gmax.
//   vn:       the input-side n-th coordinate as a jet expression,
//   dx_scale: the input-side x-derivative is dx_scale * (total x-derivative);
// the output side then has vhat^n = -1/vn and Dhat = (1/vn) * D. The inverse
// expansion is the same call with vn -> -1/vn and dx_scale -> dx_scale/vn.
GenusSeries legendre_expand(const GenusSeries& series, const RationalFunction& vn,
                            const RationalFunction& dx_scale);
GenusSeries legendre_expand(const GenusSeries& series, const RationalFunction& vn);

// D^2 wn / (8 wn^2) - (D wn)^2 / (12 wn^3) with D = dx_scale * (total
// x-derivative); the genus-two correction, as a function of the jet
// expression wn. Zero whenever wn is constant.
RationalFunction genus2_correction(const RationalFunction& wn,
                                   const RationalFunction& dx_scale);

// Residual of Ftilde_2 - F2hat - genus2_correction at the dispersionless
// identification what = vhat: F2 is given in the original jets, F2hat in the
// hatted ones (pulled back internally). Zero iff the supplied pair is
// consistent.
JetExpr check_genus2(const FrobeniusSolution& s, const JetExpr& G, const JetExpr& F2,
                     const JetExpr& F2hat);

}  // namespace wdvv
