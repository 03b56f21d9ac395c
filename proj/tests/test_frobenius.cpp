#include "doctest.h"

#include "wdvv/frobenius.hpp"
#include "wdvv/io.hpp"
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

TEST_CASE("metric is the constant antidiagonal read off from F") {
  const FrobeniusSolution s = a2();
  CHECK(s.eta(1, 1) == 0);
  CHECK(s.eta(1, 2) == 1);
  CHECK(s.eta(2, 1) == 1);
  CHECK(s.eta(2, 2) == 0);
  CHECK(s.eta_inv(1, 2) == 1);

  const FrobeniusSolution t = a3();
  CHECK(t.eta(1, 3) == 1);
  CHECK(t.eta(2, 2) == 1);
  CHECK(t.eta(3, 1) == 1);
  CHECK(t.eta(1, 1) == 0);
  CHECK(t.eta(2, 3) == 0);
}

TEST_CASE("structure constants are third partials") {
  const FrobeniusSolution s = a2();
  CHECK(s.c_lower(1, 1, 2) == RationalFunction(Scalar(1)));
  CHECK(s.c_lower(2, 2, 2) == parse_rational("1/3*v2^2"));
  CHECK(s.c_lower(2, 2, 1).is_zero());
  // raised index: c^1_{22} = eta^{12} c_{222}
  CHECK(s.c_upper(2, 2, 1) == parse_rational("1/3*v2^2"));
  CHECK(s.c_upper(2, 2, 2) == RationalFunction(Scalar(1)));
}

TEST_CASE("unit direction: c_{1ab} = eta_{ab}") {
  const FrobeniusSolution s = a3();
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      CHECK(s.c_lower(1, a, b) == RationalFunction(s.eta(a, b)));
}

TEST_CASE("associativity holds for the shipped potentials") {
  std::string why;
  CHECK(check_wdvv(a2(), &why));
  CHECK(check_wdvv(a3(), &why));
}

TEST_CASE("associativity failure names the violated indices") {
  // same shape as the A3 potential, wrong quintic coefficient
  const SolutionFile bad = load_solution(WDVV_DATA_DIR "/a3_bad.wdvv");
  std::string why;
  CHECK_FALSE(check_wdvv(bad.wdvv_only(), &why));
  CHECK(why.find("(") != std::string::npos);  // indices are reported
}

TEST_CASE("quasi-homogeneity with the shipped spectra") {
  std::string why;
  CHECK(check_quasihomogeneity(a2(), &why));
  CHECK(check_quasihomogeneity(a3(), &why));

  // wrong charge d: the Euler identity fails
  const FrobeniusSolution off(2, parse_rational("1/2*v1^2*v2 + 1/72*v2^4"),
                              Scalar(1, 2), {Scalar(-1, 4), Scalar(1, 4)});
  CHECK_FALSE(check_quasihomogeneity(off, &why));
}

TEST_CASE("degrees follow from the spectrum") {
  const FrobeniusSolution s = a2();
  CHECK(s.degree(1) == Scalar(1));          // 1 - d/2 - mu_1 = 1 - 1/6 + 1/6
  CHECK(s.degree(2) == Scalar(2, 3));
  CHECK(s.mu_at(1) + s.mu_at(2) == Scalar(0));
}

TEST_CASE("spectrum inference recovers the shipped values") {
  for (const char* name : {"/a2.wdvv", "/i2_4.wdvv", "/i2_5.wdvv", "/a3.wdvv"}) {
    const SolutionFile f = load_solution(std::string(WDVV_DATA_DIR) + name);
    REQUIRE(f.conformal());
    const Spectrum got = infer_spectrum(f.n, f.F);
    CHECK(got.d == *f.d);
    CHECK(got.mu == *f.mu);
  }
}

TEST_CASE("spectrum inference rejects an underdetermined potential") {
  CHECK_THROWS(infer_spectrum(2, parse_rational("1/2*v1^2*v2")));
}

TEST_CASE("generalized terms allow monomial denominators") {
  const auto terms = generalized_terms(parse_rational("1/2*v1^2*v2 + 1/(72*v2^2)"), 2);
  REQUIRE(terms.size() == 2);
  // sorted or not, both exponent patterns appear
  bool cubic = false, inverse = false;
  for (const auto& [e, c] : terms) {
    if (e == std::vector<int>{2, 1}) cubic = (c == Scalar(1, 2));
    if (e == std::vector<int>{0, -2}) inverse = (c == Scalar(1, 72));
  }
  CHECK(cubic);
  CHECK(inverse);
  CHECK_THROWS(generalized_terms(parse_rational("1/(v1 + v2)"), 2));
}

TEST_CASE("euler field application") {
  const FrobeniusSolution s = a2();
  // E(F) = (3 - d) F for the purely non-resonant A2 potential
  CHECK(s.euler(s.F()) == (Scalar(3) - s.d()) * s.F());
}
