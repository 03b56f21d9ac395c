// Jet-space expressions: rational functions of field variables and their
// x-derivatives, extended linearly by logarithms with exact (rational)
// coefficients.
//
// Conventions:
//  - jet variable names: "v3" (order 0), "v3_2" (second x-derivative of v3)
//  - every log argument is canonicalized on construction: sign goes to a
//    log(-1) bookkeeping slot, rational content is prime-factorized,
//    monomial factors split into per-variable logs, and what remains is an
//    integer-primitive multi-term polynomial with positive leading
//    coefficient. Equality is decided on this canonical form.
#pragma once

#include "wdvv/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wdvv {

std::string jet_var(int alpha, int order);

struct JetVar {
  int alpha;
  int order;
};
std::optional<JetVar> parse_jet_var(const std::string& name);

class JetExpr {
 public:
  JetExpr() = default;  // zero
  JetExpr(const RationalFunction& f) : base_(f) {}
  JetExpr(const Polynomial& p) : base_(p) {}
  JetExpr(const Scalar& c) : base_(c) {}

  static JetExpr log(const RationalFunction& arg);  // arg != 0

  const RationalFunction& base() const { return base_; }
  bool is_rational() const {
    return logs_.empty() && log_primes_.empty() && log_m1_ == 0;
  }
  const RationalFunction& rational() const;  // requires is_rational()
  bool is_zero() const { return is_rational() && base_.is_zero(); }

  // canonical log parts, keyed by the printed form of the argument
  const std::map<std::string, std::pair<Polynomial, Scalar>>& log_terms() const {
    return logs_;
  }
  const std::map<BigInt, Scalar>& log_primes() const { return log_primes_; }
  const Scalar& log_minus_one() const { return log_m1_; }

  JetExpr operator-() const;
  JetExpr operator+(const JetExpr& o) const;
  JetExpr operator-(const JetExpr& o) const;
  // Products require at least one log-free factor; a log-bearing factor may
  // only be scaled by a constant.
  JetExpr operator*(const JetExpr& o) const;
  JetExpr operator/(const JetExpr& o) const;  // divisor log-free and nonzero
  JetExpr& operator+=(const JetExpr& o);
  JetExpr& operator-=(const JetExpr& o);
  bool operator==(const JetExpr& o) const;
  bool operator!=(const JetExpr& o) const { return !(*this == o); }

  JetExpr derivative(const std::string& var) const;  // partial derivative

  JetExpr substitute(const std::map<std::string, RationalFunction>& repl) const;

  // Real evaluation; throws if a log argument is <= 0 or log(-1) remains.
  double evaluate(const std::map<std::string, double>& point) const;

  std::vector<std::string> vars() const;  // incl. variables inside log args

  std::string str() const;

 private:
  void add_log(const RationalFunction& arg, const Scalar& coeff);
  void add_log_poly(Polynomial p, const Scalar& coeff);
  void add_log_scalar(const Scalar& c, const Scalar& coeff);  // c != 0
  void prune();

  RationalFunction base_;
  std::map<std::string, std::pair<Polynomial, Scalar>> logs_;
  std::map<BigInt, Scalar> log_primes_;
  Scalar log_m1_{0};
};

inline JetExpr operator*(const Scalar& c, const JetExpr& e) { return e * JetExpr(c); }

// Total x-derivative: sends each jet variable to the next order.
RationalFunction total_x_derivative(const RationalFunction& f);
JetExpr total_x_derivative(const JetExpr& e);

}  // namespace wdvv
