// Sparse multivariate polynomials over exact rationals.
//
// Terms are kept as a map from exponent vectors to nonzero coefficients; the
// variable list is per-object, sorted by name, and trimmed to the variables
// that actually occur. Binary operations align variable lists by union.
#pragma once

#include "wdvv/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wdvv {

class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Scalar>;

  Polynomial() = default;  // zero polynomial
  explicit Polynomial(const Scalar& c);
  explicit Polynomial(long c);

  static Polynomial variable(const std::string& name);
  // term c * prod vars[i]^exps[i]; exponents must be >= 0
  static Polynomial monomial(const Scalar& c,
                             const std::vector<std::string>& vars,
                             const Exponents& exps);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term of a constant polynomial (0 for the zero polynomial).
  Scalar constant_value() const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(const std::string& var) const;
  bool depends_on(const std::string& var) const { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator*(const Scalar& c) const;
  Polynomial operator/(const Scalar& c) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(int e) const;  // e >= 0

  Polynomial derivative(const std::string& var) const;

  // Simultaneous substitution var -> polynomial; unmapped variables persist.
  Polynomial substitute(const std::map<std::string, Polynomial>& repl) const;

  // Every occurring variable must be present in the point map.
  double evaluate(const std::map<std::string, double>& point) const;
  Scalar evaluate_exact(const std::map<std::string, Scalar>& point) const;

  // gcd of coefficients, >= 0 (0 for the zero polynomial).
  Scalar content() const;
  // In place: divides out `factor` so coefficients become coprime integers
  // with positive leading coefficient (graded-lex); returns the factor.
  Scalar normalize_primitive();

  // Exact multivariate division: returns quotient iff divisor | *this.
  std::optional<Polynomial> divided_by(const Polynomial& divisor) const;

  // Leading term under graded-lex over this object's variable list.
  std::pair<Exponents, Scalar> leading_term() const;  // requires !is_zero()

  // Coefficient of var^k as a polynomial in the remaining variables.
  Polynomial coeff_of(const std::string& var, int k) const;

  std::string str() const;

 private:
  void insert_term(const Exponents& e, const Scalar& c);
  void trim();  // drop variables with zero exponent everywhere

  std::vector<std::string> vars_;  // sorted, unique
  TermMap terms_;                  // no zero coefficients
  friend void align(Polynomial& a, Polynomial& b);
};

// Remaps both polynomials onto the union of their variable lists.
void align(Polynomial& a, Polynomial& b);

// Primitive multivariate gcd (>= 0 leading sign, coprime integer
// coefficients); gcd with a nonzero constant is 1, gcd(0, b) = primitive(b).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

inline Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

}  // namespace wdvv
