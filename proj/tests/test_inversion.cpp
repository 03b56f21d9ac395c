#include "doctest.h"

#include "wdvv/frobenius.hpp"
#include "wdvv/inversion.hpp"
#include "wdvv/parser.hpp"
#include "wdvv/symmetry.hpp"

using namespace wdvv;

namespace {
FrobeniusSolution a2() {
  return FrobeniusSolution(2, parse_rational("1/2*v1^2*v2 + 1/72*v2^4"),
                           Scalar(1, 3), {Scalar(-1, 6), Scalar(1, 6)});
}
FrobeniusSolution a3() {
  return FrobeniusSolution(
      3, parse_rational("1/2*v1^2*v3 + 1/2*v1*v2^2 + 1/4*v2^2*v3^2 + 1/60*v3^5"),
      Scalar(1, 2), {Scalar(-1, 4), Scalar(0), Scalar(1, 4)});
}
}  // namespace

TEST_CASE("inversion closed form, hand-checked") {
  // F = 1/2 v1^2 v2 + v2^4/72 maps to 1/2 v1^2 v2 + 1/(72 v2^2):
  // with n = 2, v1 is fixed and v2 -> -1/v2, so (v2)^-2 (F - quadratic part)
  // evaluates monomial by monomial.
  const FrobeniusSolution shat = invert_solution(a2());
  CHECK(shat.F() == parse_rational("1/2*v1^2*v2 + 1/(72*v2^2)"));
  CHECK(shat.d() == Scalar(5, 3));
  CHECK(shat.mu() == std::vector<Scalar>{Scalar(-5, 6), Scalar(5, 6)});
}

TEST_CASE("inverse potential solves the associativity equations") {
  std::string why;
  CHECK(check_wdvv(invert_solution(a2()), &why));
  CHECK(check_wdvv(invert_solution(a3()), &why));
  CHECK(check_quasihomogeneity(invert_solution(a2()), &why));
  CHECK(check_quasihomogeneity(invert_solution(a3()), &why));
}

TEST_CASE("charge and spectrum transform as d -> 2 - d") {
  const FrobeniusSolution s = a3();
  const FrobeniusSolution shat = invert_solution(s);
  CHECK(shat.d() == Scalar(2) - s.d());
  // mu_1 -> mu_n - 1, mu_n -> mu_1 + 1, middles fixed
  CHECK(shat.mu_at(1) == s.mu_at(3) - 1);
  CHECK(shat.mu_at(3) == s.mu_at(1) + 1);
  CHECK(shat.mu_at(2) == s.mu_at(2));
}

TEST_CASE("spectrum inference confirms the transformed grading") {
  for (const FrobeniusSolution& s : {a2(), a3()}) {
    const FrobeniusSolution shat = invert_solution(s);
    const Spectrum got = infer_spectrum(shat.n(), shat.F());
    CHECK(got.d == shat.d());
    CHECK(got.mu == shat.mu());
  }
}

TEST_CASE("forward and backward coordinate maps are mutually inverse") {
  for (const FrobeniusSolution& s : {a2(), a3()}) {
    const auto fwd = inversion_forward(s);
    const auto bwd = inversion_backward(s);
    for (int a = 1; a <= s.n(); ++a) {
      const std::string va = s.var(a);
      CHECK(fwd.at(va).substitute(bwd) == RationalFunction::variable(va));
      CHECK(bwd.at(va).substitute(fwd) == RationalFunction::variable(va));
    }
  }
}

TEST_CASE("n = 2 forward map fixes the first coordinate") {
  // for n = 2 with eta_{12} = 1: vhat1 = eta_{ab} v^a v^b / (2 v^2) = v1
  const auto fwd = inversion_forward(a2());
  CHECK(fwd.at("v1") == RationalFunction::variable("v1"));
  CHECK(fwd.at("v2") == parse_rational("-1/v2"));
}

TEST_CASE("double inversion returns the original up to a quadratic") {
  for (const FrobeniusSolution& s : {a2(), a3()}) {
    const FrobeniusSolution back = invert_solution(invert_solution(s));
    CHECK(same_up_to_quadratic(back, s));
    CHECK(back.d() == s.d());
  }
  // control: two genuinely different potentials differ by more than a quadratic
  CHECK_FALSE(same_up_to_quadratic(
      a2(), FrobeniusSolution(2, parse_rational("1/2*v1^2*v2 + 1/70*v2^4"),
                              Scalar(1, 3), {Scalar(-1, 6), Scalar(1, 6)})));
}

TEST_CASE("hessian identity with c = (1 - d)/2") {
  std::string why;
  CHECK(check_hessian_identity(a2(), &why));
  CHECK(check_hessian_identity(a3(), &why));
}

TEST_CASE("intersection form transforms covariantly") {
  std::string why;
  CHECK(check_metric_covariance(a2(), &why));
  CHECK(check_metric_covariance(a3(), &why));
}

TEST_CASE("index helpers") {
  CHECK(phi_index(1, 5) == 5);
  CHECK(phi_index(5, 5) == 1);
  CHECK(phi_index(3, 5) == 3);
  CHECK(delta_index(1, 5) == 1);
  CHECK(delta_index(5, 5) == -1);
  CHECK(delta_index(2, 5) == 0);
}
