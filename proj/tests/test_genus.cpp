#include "doctest.h"

#include "wdvv/genus.hpp"
#include "wdvv/io.hpp"
#include "wdvv/parser.hpp"

using namespace wdvv;

namespace {
FrobeniusSolution a2() {
  return FrobeniusSolution(2, parse_rational("1/2*v1^2*v2 + 1/72*v2^4"),
                           Scalar(1, 3), {Scalar(-1, 6), Scalar(1, 6)});
}
FrobeniusSolution i24() {
  return FrobeniusSolution(2, parse_rational("1/2*v1^2*v2 + 1/5*v2^5"),
                           Scalar(1, 2), {Scalar(-1, 4), Scalar(1, 4)});
}
FrobeniusSolution a3() {
  return FrobeniusSolution(
      3, parse_rational("1/2*v1^2*v3 + 1/2*v1*v2^2 + 1/4*v2^2*v3^2 + 1/60*v3^5"),
      Scalar(1, 2), {Scalar(-1, 4), Scalar(0), Scalar(1, 4)});
}
}  // namespace

TEST_CASE("dispersion determinant for A2, frozen") {
  const auto M = dispersion_matrix(a2());
  CHECK(det(M) == parse_rational("1/3*v2*v2_1^2 - v1_1^2"));
}

TEST_CASE("jet coordinate change matches the determinant identity") {
  std::string why;
  CHECK(check_det_identity(a2(), &why));
  CHECK(check_det_identity(i24(), &why));
  CHECK(check_det_identity(a3(), &why));
}

TEST_CASE("genus-one potential transforms by the G-function shift") {
  std::string why;
  const JetExpr G0;
  CHECK(check_genus1_transform(a2(), G0, &why));
  CHECK(check_genus1_transform(a3(), G0, &why));
  const JetExpr G24 =
      Scalar(-1, 48) * JetExpr::log(RationalFunction::variable("v2"));
  CHECK(check_genus1_transform(i24(), G24, &why));
  // a wrong G-function must fail
  const JetExpr Gbad =
      Scalar(1, 5) * JetExpr::log(RationalFunction::variable("v2"));
  CHECK_FALSE(check_genus1_transform(i24(), Gbad, &why));
}

TEST_CASE("transformed G-function gains (n/24 - 1/2) log v^n") {
  const JetExpr G;
  const JetExpr Gt = transform_G(G, 2);
  const JetExpr expected = (Scalar(2, 24) - Scalar(1, 2)) *
                           JetExpr::log(RationalFunction::variable("v2"));
  CHECK((Gt - expected).is_zero());
}

TEST_CASE("expansion through genus two reproduces the closed form") {
  const FrobeniusSolution s = a2();
  const JetExpr F1 = genus1_potential(s, JetExpr());
  const JetExpr F2 = JetExpr(parse_rational("v1_2*v2 + v2_1^4"));
  const RationalFunction vn = RationalFunction::variable("v2");

  const GenusSeries tilde = legendre_expand({{F1, F2}}, vn);
  CHECK(tilde.F(1) == F1);
  const RationalFunction A1 = total_x_derivative(F1).rational();
  const JetExpr expected = F2 - JetExpr(A1 * A1 / (Scalar(2) * vn));
  CHECK(tilde.F(2) == expected);

  SUBCASE("the substitution is an involution through genus two") {
    const RationalFunction vhatn = -(RationalFunction(Scalar(1)) / vn);
    const GenusSeries back =
        legendre_expand(tilde, vhatn, RationalFunction(Scalar(1)) / vn);
    CHECK(back.F(1) == F1);
    CHECK(back.F(2) == F2);
  }
}

TEST_CASE("genus-two correction vanishes at constant jet") {
  CHECK(genus2_correction(RationalFunction(Scalar(5)), RationalFunction(Scalar(1)))
            .is_zero());
  CHECK(genus2_correction(RationalFunction(Scalar(-1, 3)),
                          RationalFunction(Scalar(7)))
            .is_zero());
}

TEST_CASE("shipped genus-two data satisfies the transformation rule") {
  auto parse_pair = [](const std::string& path) {
    JetExpr F2, F2hat;
    for (const auto& [name, e] : load_named_expressions(path)) {
      if (name == "F2") F2 = e;
      if (name == "F2hat") F2hat = e;
    }
    return std::make_pair(F2, F2hat);
  };

  SUBCASE("A2 with G = 0") {
    const auto [F2, F2hat] = parse_pair(WDVV_DATA_DIR "/a2.f2");
    const JetExpr resid = check_genus2(a2(), JetExpr(), F2, F2hat);
    CHECK(resid.is_zero());

    // negative control: shifting the hatted side leaves a residual
    const JetExpr bad = F2hat + JetExpr(RationalFunction::variable("v2_1"));
    CHECK_FALSE(check_genus2(a2(), JetExpr(), F2, bad).is_zero());
  }
  SUBCASE("I2(4) with its G-function") {
    const auto [F2, F2hat] = parse_pair(WDVV_DATA_DIR "/i2_4.f2");
    const JetExpr G24 =
        Scalar(-1, 48) * JetExpr::log(RationalFunction::variable("v2"));
    CHECK(check_genus2(i24(), G24, F2, F2hat).is_zero());
  }
}

TEST_CASE("jet maps are mutually inverse through order two") {
  const FrobeniusSolution s = a2();
  const auto hat = hat_jet_map(s, 2);
  const auto unhat = unhat_jet_map(s, 2);
  for (const auto& [name, expr] : unhat) {
    // compose: the unhatted jet written in hatted jets, pulled back
    CHECK(expr.substitute(hat) == RationalFunction::variable(name));
  }
}
