#include "doctest.h"

#include <cmath>

#include "wdvv/hierarchy.hpp"
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

// the standard exactly solvable configuration: one unit shift at (1,1) makes
// the hodograph system collapse to v^alpha = t^{alpha,0}
HodographSetup trivial_setup(double t1, double t2) {
  HodographSetup h;
  h.shifts[{1, 1}] = Scalar(1);
  h.times[{1, 0}] = t1;
  h.times[{2, 0}] = t2;
  return h;
}
}  // namespace

TEST_CASE("flow matrices, frozen") {
  const FrobeniusSolution s = a2();
  const Calibration cal = build_calibration(s, 2);
  SUBCASE("the (1,0) flow is translation in x") {
    const auto A = flow_matrix(s, cal, 1, 0);
    CHECK(A[0][0] == RationalFunction(Scalar(1)));
    CHECK(A[0][1].is_zero());
    CHECK(A[1][0].is_zero());
    CHECK(A[1][1] == RationalFunction(Scalar(1)));
  }
  SUBCASE("the (2,0) flow couples the coordinates") {
    const auto A = flow_matrix(s, cal, 2, 0);
    CHECK(A[0][0].is_zero());
    CHECK(A[0][1] == parse_rational("1/3*v2"));
    CHECK(A[1][0] == RationalFunction(Scalar(1)));
    CHECK(A[1][1].is_zero());
  }
}

TEST_CASE("trivial configuration solves the hodograph system exactly") {
  const FrobeniusSolution s = a2();
  const Calibration cal = build_calibration(s, 3);
  const HodographSetup h = trivial_setup(0.3, 0.1);

  const auto res = hodograph_residual(s, cal, h, {0.3, 0.1});
  for (double r : res) CHECK(r == doctest::Approx(0.0).epsilon(1e-15));

  // Newton from a perturbed start lands on it
  const auto v = hodograph_solve(s, cal, h, {0.25, 0.14});
  REQUIRE(v.has_value());
  CHECK((*v)[0] == doctest::Approx(0.3).epsilon(1e-13));
  CHECK((*v)[1] == doctest::Approx(0.1).epsilon(1e-13));
}

TEST_CASE("trivial configuration extends to n = 3") {
  const FrobeniusSolution s = a3();
  const Calibration cal = build_calibration(s, 3);
  HodographSetup h;
  h.shifts[{1, 1}] = Scalar(1);
  h.times[{1, 0}] = 0.25;
  h.times[{2, 0}] = 0.1;
  h.times[{3, 0}] = 0.15;
  const auto v = hodograph_solve(s, cal, h, {0.2, 0.12, 0.2});
  REQUIRE(v.has_value());
  CHECK((*v)[0] == doctest::Approx(0.25).epsilon(1e-13));
  CHECK((*v)[1] == doctest::Approx(0.10).epsilon(1e-13));
  CHECK((*v)[2] == doctest::Approx(0.15).epsilon(1e-13));
}

TEST_CASE("log tau at the reference configuration, hand-checked") {
  // logtau = (1/2) sum ttilde ttilde Omega with ttilde^{1,0} = 0.3,
  // ttilde^{2,0} = 0.1, ttilde^{1,1} = -1 at v = (0.3, 0.1); the sum
  // evaluates to 0.0045013888...
  const FrobeniusSolution s = a2();
  const Calibration cal = build_calibration(s, 3);
  const OmegaTable om = omega_table(s, cal, 2);
  const HodographSetup h = trivial_setup(0.3, 0.1);
  const double lt = log_tau_genus0(s, om, h, {0.3, 0.1});
  CHECK(lt == doctest::Approx(0.004501388888888889).epsilon(1e-12));

  // first derivative in x is theta-driven: d log tau / d t^{1,0}
  const double dx = dlog_tau(s, om, h, {0.3, 0.1}, 1, 0);
  CHECK(dx == doctest::Approx(0.03).epsilon(1e-12));
}

TEST_CASE("nontrivial time configuration converges and defines tau") {
  const FrobeniusSolution s = a2();
  const Calibration cal = build_calibration(s, 5);
  HodographSetup h = trivial_setup(0.3, 0.12);
  h.times[{2, 1}] = 0.04;
  const auto v = hodograph_solve(s, cal, h, {0.3, 0.12});
  REQUIRE(v.has_value());
  const auto res = hodograph_residual(s, cal, h, *v);
  for (double r : res) CHECK(std::fabs(r) <= 1e-12);

  // the defining property of tau: second derivatives match the Omega table
  const OmegaTable om = omega_table(s, cal, 3);
  CHECK(check_tau_def(s, cal, om, h, *v, 1e-3, 2) <= 1e-6);
}

TEST_CASE("time shifts enter only through ttilde") {
  HodographSetup h;
  h.shifts[{1, 1}] = Scalar(1);
  h.times[{1, 1}] = 0.25;
  CHECK(h.ttilde({1, 1}) == doctest::Approx(-0.75));
  CHECK(h.ttilde({2, 0}) == 0.0);
  const auto sup = h.support();
  CHECK(sup.size() == 1);  // one index carries either a time or a shift
}
