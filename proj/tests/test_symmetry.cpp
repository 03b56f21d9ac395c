#include "doctest.h"

#include <cmath>

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

HodographSetup reference_setup() {
  HodographSetup h;
  h.shifts[{1, 1}] = Scalar(1);
  h.times[{1, 0}] = 0.3;
  h.times[{2, 0}] = 0.1;
  return h;
}
}  // namespace

TEST_CASE("transformed calibration calibrates the inverse solution") {
  for (const FrobeniusSolution& s : {a2(), a3()}) {
    const Calibration cal = build_calibration(s, 4);
    const Calibration calhat = transform_calibration(s, cal);
    CHECK(calhat.levels() == 3);
    std::string why;
    CHECK(check_calibration(invert_solution(s), calhat, &why));
  }
}

TEST_CASE("transformed tower, explicit low levels for n = 2") {
  // thetahat_{1,0} = -1/v^n and thetahat_{2,q} = theta_{1,q+1}/v^n, composed
  // with the backward map; spot-check against the closed forms.
  const FrobeniusSolution s = a2();
  const Calibration cal = build_calibration(s, 3);
  const Calibration calhat = transform_calibration(s, cal);
  // On the hatted side theta_{1,0} must be eta_{1b} vhat^b = vhat2, and
  // theta_{2,0} = vhat1: the defining normalization survives the transform.
  CHECK(calhat.th(1, 0) == RationalFunction::variable("v2"));
  CHECK(calhat.th(2, 0) == RationalFunction::variable("v1"));
}

TEST_CASE("two-point table transforms entry by entry") {
  std::string why;
  CHECK(check_omega_transform(a2(), build_calibration(a2(), 7), 3, &why));
  CHECK(check_omega_transform(a3(), build_calibration(a3(), 5), 2, &why));
}

TEST_CASE("each hatted flow is a combination of unhatted flows") {
  const FrobeniusSolution s = a2();
  const Calibration cal = build_calibration(s, 4);
  std::string why;
  for (int alpha = 1; alpha <= 2; ++alpha)
    for (int p = 0; p <= 2; ++p)
      CHECK(check_flow_correspondence(s, cal, alpha, p, &why));
}

TEST_CASE("time transform at the reference configuration") {
  const FrobeniusSolution s = a2();
  const Calibration cal = build_calibration(s, 5);
  const HodographSetup h = reference_setup();
  const std::vector<double> v = {0.3, 0.1};

  // hat x is the x-derivative of log tau: 0.03 at this configuration
  const double hx = hat_x_of(s, cal, h, v);
  CHECK(hx == doctest::Approx(0.03).epsilon(1e-12));

  const HodographSetup hh = transform_times(s, h, hx, 2);
  // ttildehat^{1,0} = hat x; ttildehat^{1,1} = -ttilde^{2,0};
  // ttildehat^{2,p} = ttilde^{1,p+1}
  CHECK(hh.ttilde({1, 0}) == doctest::Approx(0.03).epsilon(1e-12));
  CHECK(hh.ttilde({1, 1}) == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(hh.ttilde({2, 0}) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("transformed times solve the hatted hodograph system") {
  const FrobeniusSolution s = a2();
  const Calibration cal = build_calibration(s, 5);
  const HodographSetup h = reference_setup();
  CHECK(check_prop51(s, cal, h, {0.3, 0.1}) <= 1e-12);
}

TEST_CASE("tau functions agree across the inversion") {
  const FrobeniusSolution s = a2();
  const Calibration cal = build_calibration(s, 6);
  const HodographSetup h = reference_setup();
  const std::vector<double> v = {0.3, 0.1};

  SUBCASE("scalar transformation rule") {
    // log tauhat = log tau - x d(log tau)/dx = 0.0045013888... - 0.3 * 0.03
    CHECK(legendre_tau(0.004501388888888889, 0.3, 0.03) ==
          doctest::Approx(-0.004498611111111111).epsilon(1e-12));
  }
  SUBCASE("derived hatted calibration") {
    CHECK(check_legendre_two_sided(s, cal, h, v, 3) <= 1e-12);
  }
  SUBCASE("explicitly supplied hatted calibration") {
    const Calibration calhat = transform_calibration(s, cal);
    CHECK(check_legendre_two_sided(s, cal, calhat, h, v, 2) <= 1e-12);
  }
}

TEST_CASE("two-sided agreement on a configuration with level-one times") {
  const FrobeniusSolution s = a2();
  const Calibration cal = build_calibration(s, 8);
  HodographSetup h = reference_setup();
  h.times[{2, 1}] = 0.05;
  const auto v = hodograph_solve(s, cal, h, {0.3, 0.1});
  REQUIRE(v.has_value());
  REQUIRE(std::fabs((*v)[1]) >= 0.05);
  CHECK(check_prop51(s, cal, h, *v) <= 1e-9);
  CHECK(check_legendre_two_sided(s, cal, h, *v, 3) <= 1e-8);
}

TEST_CASE("two-sided agreement for n = 3") {
  const FrobeniusSolution s = a3();
  const Calibration cal = build_calibration(s, 6);
  HodographSetup h;
  h.shifts[{1, 1}] = Scalar(1);
  h.times[{1, 0}] = 0.25;
  h.times[{2, 0}] = 0.1;
  h.times[{3, 0}] = 0.15;
  const auto v = hodograph_solve(s, cal, h, {0.25, 0.1, 0.15});
  REQUIRE(v.has_value());
  CHECK(check_prop51(s, cal, h, *v) <= 1e-9);
  CHECK(check_legendre_two_sided(s, cal, h, *v, 2) <= 1e-8);
}
