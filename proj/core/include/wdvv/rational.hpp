// Rational functions: quotients of multivariate polynomials, kept reduced
// (gcd cancelled, denominator integer-primitive with positive leading
// coefficient).
#pragma once

#include "wdvv/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace wdvv {

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Scalar(1)) {}  // zero
  RationalFunction(const Polynomial& p) : num_(p), den_(Scalar(1)) {}
  RationalFunction(const Scalar& c) : num_(c), den_(Scalar(1)) {}
  RationalFunction(Polynomial num, Polynomial den);  // reduces; den != 0

  static RationalFunction variable(const std::string& name) {
    return RationalFunction(Polynomial::variable(name));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Scalar constant_value() const;
  bool is_polynomial() const { return den_.is_constant(); }
  Polynomial as_polynomial() const;  // requires is_polynomial()

  std::vector<std::string> vars() const;  // union of num/den variables

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;  // o != 0
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  bool operator==(const RationalFunction& o) const;  // cross multiplication
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction pow(int e) const;  // negative allowed for nonzero base

  RationalFunction derivative(const std::string& var) const;

  // Simultaneous substitution; unmapped variables persist. Throws if a
  // denominator vanishes identically.
  RationalFunction substitute(const std::map<std::string, RationalFunction>& repl) const;

  double evaluate(const std::map<std::string, double>& point) const;
  Scalar evaluate_exact(const std::map<std::string, Scalar>& point) const;

  std::string str() const;

 private:
  struct raw_tag {};
  // num and den already coprime: skips the gcd, only normalizes signs.
  RationalFunction(Polynomial num, Polynomial den, raw_tag);

  void reduce();
  void normalize_sign();

  Polynomial num_, den_;
};

inline RationalFunction operator*(const Scalar& c, const RationalFunction& f) {
  return RationalFunction(c) * f;
}

// Substitutes rational functions into a polynomial.
RationalFunction substitute_rational(
    const Polynomial& p, const std::map<std::string, RationalFunction>& repl);

}  // namespace wdvv
