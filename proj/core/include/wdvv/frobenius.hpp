// A WDVV solution: potential F(v^1..v^n) with charge d and spectrum mu,
// together with the tensors derived from it (flat metric eta, structure
// constants c) and the axiom checks.
//
// Conventions (1-based field indices):
//   eta_{ab}    = d^3 F / dv^1 dv^a dv^b, constant and antidiagonal
//   c_{abg}     = d^3 F / dv^a dv^b dv^g
//   deg v^a     = 1 - d/2 - mu_a  (Euler field E = sum deg_a v^a d/dv^a)
//   E(F)        = (3 - d) F  up to at most quadratic terms
//   mu_1 = -d/2, mu_a + mu_{n+1-a} = 0
#pragma once

#include "wdvv/linalg.hpp"
#include "wdvv/rational.hpp"

#include <string>
#include <vector>

namespace wdvv {

class FrobeniusSolution {
 public:
  // Validates structure: n >= 2, mu.size() == n, mu_1 == -d/2, eta constant,
  // antidiagonal, nondegenerate. Throws std::runtime_error with the reason.
  FrobeniusSolution(int n, RationalFunction F, Scalar d, std::vector<Scalar> mu);

  int n() const { return n_; }
  const RationalFunction& F() const { return F_; }
  const Scalar& d() const { return d_; }
  const std::vector<Scalar>& mu() const { return mu_; }
  Scalar mu_at(int alpha) const { return mu_.at(alpha - 1); }
  Scalar degree(int alpha) const { return Scalar(1) - d_ / 2 - mu_at(alpha); }

  std::string var(int alpha) const { return "v" + std::to_string(alpha); }

  Scalar eta(int a, int b) const { return eta_[a - 1][b - 1]; }
  Scalar eta_inv(int a, int b) const;
  const Mat<Scalar>& eta() const { return eta_; }

  RationalFunction c_lower(int a, int b, int g) const;  // c_{abg}
  RationalFunction c_upper(int a, int b, int g) const;  // c^a_{bg}

  // Euler derivation E(f) = sum_a deg_a v^a df/dv^a
  RationalFunction euler(const RationalFunction& f) const;

 private:
  int n_;
  RationalFunction F_;
  Scalar d_;
  std::vector<Scalar> mu_;
  Mat<Scalar> eta_;
};

// Associativity of the product c^a_{bg}: holds iff F solves WDVV.
bool check_wdvv(const FrobeniusSolution& s, std::string* why = nullptr);

// E(F) - (3-d) F must be a polynomial of total degree <= 2 whose quadratic
// part respects the resonance condition (coefficient of v^a v^b nonzero only
// when mu_a + mu_b = -1, linear in v^a only when mu_a = ... resonant, etc).
bool check_quasihomogeneity(const FrobeniusSolution& s, std::string* why = nullptr);

struct Spectrum {
  Scalar d;
  std::vector<Scalar> mu;
};

// Infers (d, mu) from the generalized monomials of F alone: degrees solve
// sum_g I_g deg_g = 3 - d for every non-quadratic monomial exponent I.
// Throws if the system is inconsistent, underdetermined, or the leftover
// quadratic terms violate the resonance conditions.
Spectrum infer_spectrum(int n, const RationalFunction& F);

// Exponent/coefficient expansion of F, allowing negative exponents when the
// denominator is a monomial (throws otherwise).
std::vector<std::pair<std::vector<int>, Scalar>> generalized_terms(
    const RationalFunction& F, int n);

}  // namespace wdvv
