// Calibrations: towers of densities theta_{alpha,p} satisfying
//   theta_{alpha,0}   = eta_{alpha,beta} v^beta,
//   d_b d_g theta_{alpha,p} = c^l_{bg} d_l theta_{alpha,p-1},
//   d_1 theta_{alpha,p}     = theta_{alpha,p-1},
//   E(theta_{alpha,p}) = (p + 1 + mu_1 + mu_alpha) theta_{alpha,p}
//                        + sum_k theta_{gamma,p-k} (R_k)^gamma_alpha,
// with (R_k)^gamma_alpha supported on mu_gamma - mu_alpha = k, and the
// orthonormality sum_{k+l=s} (-1)^l <grad theta_{alpha,k}, grad theta_{beta,l}>
// = delta_{s0} eta_{alpha,beta}.
//
// The two-point table Omega_{alpha,p;beta,q} is derived from a calibration by
//   Omega_{alpha,p;beta,0} = d_beta theta_{alpha,p+1},
//   Omega_{alpha,p;beta,q} = <grad theta_{alpha,p+1}, grad theta_{beta,q}>
//                            - Omega_{alpha,p+1;beta,q-1}.
#pragma once

#include "wdvv/frobenius.hpp"

#include <string>
#include <vector>

namespace wdvv {

struct Calibration {
  int n = 0;
  // theta[alpha-1][p], p = 0..levels()
  std::vector<std::vector<RationalFunction>> theta;
  // R[k-1] holds (R_k)^gamma_alpha at row gamma-1, column alpha-1
  std::vector<Mat<Scalar>> R;

  int levels() const {
    return theta.empty() ? -1 : static_cast<int>(theta[0].size()) - 1;
  }
  const RationalFunction& th(int alpha, int p) const { return theta[alpha - 1][p]; }
  Scalar R_entry(int k, int gamma, int alpha) const {
    if (k < 1 || k > static_cast<int>(R.size())) return Scalar(0);
    return R[k - 1][gamma - 1][alpha - 1];
  }
};

// Constructs theta levels 0..P (and any forced R entries) for a polynomial
// potential by radial-homotopy integration plus the affine/E-condition solve.
// Throws on non-polynomial input or an inconsistent stage.
Calibration build_calibration(const FrobeniusSolution& s, int P);

// Verifies every defining property above, exactly. On failure, stores the
// first reason in `why`.
bool check_calibration(const FrobeniusSolution& s, const Calibration& c,
                       std::string* why = nullptr);

struct OmegaTable {
  int n = 0;
  int P = 0;  // p,q range over 0..P-1
  std::vector<RationalFunction> entries;
  const RationalFunction& at(int alpha, int p, int beta, int q) const;
  RationalFunction& at(int alpha, int p, int beta, int q);
};

// Needs cal.levels() >= 2P-1.
OmegaTable omega_table(const FrobeniusSolution& s, const Calibration& cal, int P);
// Builds the calibration internally (levels 2P-1).
OmegaTable omega_table(const FrobeniusSolution& s, int P);

// Verifies, exactly, for every table entry (p, q < om.P): the symmetry
// Omega_{alpha,p;beta,q} = Omega_{beta,q;alpha,p}; the derivative identity
//   d_xi Omega_{alpha,p;beta,q} = (d_sigma theta_{alpha,p})(d_lambda theta_{beta,q})
//                                 * eta^{sigma gamma} c^lambda_{gamma xi};
// and the first-row identity Omega_{1,0;beta,q} = theta_{beta,q}.
bool check_omega(const FrobeniusSolution& s, const Calibration& cal,
                 const OmegaTable& om, std::string* why = nullptr);

// Text round-trip:
//   n = <int>
//   [theta alpha=<a> p=<p>] <expression>
//   [R k=<k>] <n*n entries, row-major, whitespace separated>
std::string calibration_to_text(const Calibration& c);
Calibration calibration_from_text(const std::string& text);

}  // namespace wdvv
