#include "doctest.h"

#include "wdvv/calibration.hpp"
#include "wdvv/parser.hpp"

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

TEST_CASE("level-zero densities lower the index with eta") {
  const Calibration cal = build_calibration(a2(), 1);
  CHECK(cal.th(1, 0) == RationalFunction::variable("v2"));
  CHECK(cal.th(2, 0) == RationalFunction::variable("v1"));
}

TEST_CASE("A2 tower, frozen low levels") {
  const Calibration cal = build_calibration(a2(), 3);
  CHECK(cal.levels() == 3);
  CHECK(cal.th(1, 1) == parse_rational("v1*v2"));
  CHECK(cal.th(2, 1) == parse_rational("1/18*v2^3 + 1/2*v1^2"));
  CHECK(cal.th(1, 2) == parse_rational("1/36*v2^4 + 1/2*v1^2*v2"));
  CHECK(cal.th(2, 2) == parse_rational("1/18*v1*v2^3 + 1/6*v1^3"));
  // theta_{1,1} = (1/2) eta_{ab} v^a v^b for every calibration built here
  CHECK(cal.th(1, 1) == parse_rational("v1*v2"));
}

TEST_CASE("calibration axioms hold exactly") {
  std::string why;
  const Calibration c2 = build_calibration(a2(), 5);
  CHECK(check_calibration(a2(), c2, &why));
  const Calibration c3 = build_calibration(a3(), 4);
  CHECK(check_calibration(a3(), c3, &why));
}

TEST_CASE("A2 carries no resonant R matrices, A3 does at k = 0 only trivially") {
  const Calibration cal = build_calibration(a2(), 4);
  // mu_gamma - mu_alpha = k >= 1 has no solutions for mu = (-1/6, 1/6)
  for (int k = 1; k <= 4; ++k)
    for (int g = 1; g <= 2; ++g)
      for (int a = 1; a <= 2; ++a) CHECK(cal.R_entry(k, g, a) == 0);
}

TEST_CASE("tampered tower violates the axioms with a reason") {
  Calibration cal = build_calibration(a2(), 3);
  cal.theta[0][2] += RationalFunction::variable("v1");
  std::string why;
  CHECK_FALSE(check_calibration(a2(), cal, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("two-point table: symmetry, derivative law, normalization") {
  const FrobeniusSolution s = a2();
  const Calibration cal = build_calibration(s, 5);
  const OmegaTable om = omega_table(s, cal, 3);
  std::string why;
  CHECK(check_omega(s, cal, om, &why));

  SUBCASE("first-row entries reproduce the densities") {
    for (int beta = 1; beta <= 2; ++beta)
      for (int q = 0; q < 3; ++q) CHECK(om.at(1, 0, beta, q) == cal.th(beta, q));
  }
  SUBCASE("explicit low entry") {
    // Omega_{1,0;1,0} = d_1 theta_{1,1} = v2
    CHECK(om.at(1, 0, 1, 0) == RationalFunction::variable("v2"));
    // Omega_{2,0;2,0} = d_2 theta_{2,1} = v2^2/6
    CHECK(om.at(2, 0, 2, 0) == parse_rational("1/6*v2^2"));
  }
  SUBCASE("tampering breaks the checked identities") {
    OmegaTable bad = om;
    bad.at(2, 0, 1, 1) += RationalFunction(Scalar(1, 7));
    CHECK_FALSE(check_omega(s, cal, bad, &why));
    CHECK(why.find("Omega") != std::string::npos);
  }
}

TEST_CASE("the A3 table passes the same laws") {
  const FrobeniusSolution s = a3();
  const Calibration cal = build_calibration(s, 3);
  const OmegaTable om = omega_table(s, cal, 2);
  std::string why;
  CHECK(check_omega(s, cal, om, &why));
}

TEST_CASE("calibration text round-trip") {
  const Calibration cal = build_calibration(a2(), 3);
  const Calibration back = calibration_from_text(calibration_to_text(cal));
  CHECK(back.n == cal.n);
  CHECK(back.levels() == cal.levels());
  for (int a = 1; a <= 2; ++a)
    for (int p = 0; p <= 3; ++p) CHECK(back.th(a, p) == cal.th(a, p));
  std::string why;
  CHECK(check_calibration(a2(), back, &why));
}
