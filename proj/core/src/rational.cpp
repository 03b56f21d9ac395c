#include "wdvv/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdvv {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, raw_tag)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize_sign();
}

void RationalFunction::normalize_sign() {
  // denominator integer-primitive, positive leading coefficient
  const Scalar f = den_.normalize_primitive();
  num_ = num_ / f;
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(Scalar(1));
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divided_by(g);
      den_ = *den_.divided_by(g);
    }
  }
  normalize_sign();
}

Scalar RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value on non-constant rational function");
  return num_.constant_value() / den_.constant_value();
}

Polynomial RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw std::logic_error("as_polynomial on non-polynomial rational function");
  return num_ / den_.constant_value();
}

std::vector<std::string> RationalFunction::vars() const {
  std::vector<std::string> u;
  std::set_union(num_.vars().begin(), num_.vars().end(), den_.vars().begin(),
                 den_.vars().end(), std::back_inserter(u));
  return u;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {
Polynomial exact_quot(const Polynomial& a, const Polynomial& b) {
  auto q = a.divided_by(b);
  if (!q) throw std::logic_error("rational arithmetic: inexact division");
  return std::move(*q);
}
}  // namespace

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  // Classical reduced addition: with g = gcd(b, d), b = g b', d = g d',
  //   a/b + c/d = t / (g b' d'),  t = a d' + c b'.
  // a is coprime to b and c to d, so gcd(t, b' d') = 1 and only gcd(t, g)
  // can cancel. Keeping the gcds on the denominators (which usually share
  // their whole structure) avoids one large gcd on doubled-size products.
  if (den_ == o.den_) {
    Polynomial t = num_ + o.num_;
    if (t.is_zero()) return RationalFunction();
    const Polynomial g2 = poly_gcd(t, den_);
    if (g2.is_constant()) return RationalFunction(std::move(t), den_, raw_tag{});
    return RationalFunction(exact_quot(t, g2), exact_quot(den_, g2), raw_tag{});
  }
  const Polynomial g = poly_gcd(den_, o.den_);
  if (g.is_constant())
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_,
                            raw_tag{});
  const Polynomial bp = exact_quot(den_, g);
  const Polynomial dp = exact_quot(o.den_, g);
  Polynomial t = num_ * dp + o.num_ * bp;
  if (t.is_zero()) return RationalFunction();
  const Polynomial g2 = poly_gcd(t, g);
  if (g2.is_constant())
    return RationalFunction(std::move(t), bp * dp * g, raw_tag{});
  return RationalFunction(exact_quot(t, g2), bp * dp * exact_quot(g, g2),
                          raw_tag{});
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  // (a/b)(c/d) with g1 = gcd(a, d), g2 = gcd(c, b):
  //   ((a/g1)(c/g2)) / ((b/g2)(d/g1)) is already in lowest terms.
  if (is_zero() || o.is_zero()) return RationalFunction();
  const Polynomial g1 = poly_gcd(num_, o.den_);
  const Polynomial g2 = poly_gcd(o.num_, den_);
  const bool t1 = g1.is_constant(), t2 = g2.is_constant();
  return RationalFunction(
      (t1 ? num_ : exact_quot(num_, g1)) * (t2 ? o.num_ : exact_quot(o.num_, g2)),
      (t2 ? den_ : exact_quot(den_, g2)) * (t1 ? o.den_ : exact_quot(o.den_, g1)),
      raw_tag{});
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  if (is_zero()) return RationalFunction();
  const Polynomial g1 = poly_gcd(num_, o.num_);
  const Polynomial g2 = poly_gcd(den_, o.den_);
  const bool t1 = g1.is_constant(), t2 = g2.is_constant();
  return RationalFunction(
      (t1 ? num_ : exact_quot(num_, g1)) * (t2 ? o.den_ : exact_quot(o.den_, g2)),
      (t2 ? den_ : exact_quot(den_, g2)) * (t1 ? o.num_ : exact_quot(o.num_, g1)),
      raw_tag{});
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = *this + o;
  return *this;
}
RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  *this = *this - o;
  return *this;
}
RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = *this * o;
  return *this;
}
RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  *this = *this / o;
  return *this;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::pow(int e) const {
  // num_ and den_ are coprime, so their powers are too: no gcd needed.
  if (e == 0) return RationalFunction(Scalar(1));
  if (e < 0) {
    if (is_zero()) throw std::domain_error("negative power of zero rational function");
    return RationalFunction(den_.pow(-e), num_.pow(-e), raw_tag{});
  }
  return RationalFunction(num_.pow(e), den_.pow(e), raw_tag{});
}

RationalFunction RationalFunction::derivative(const std::string& var) const {
  // (n/d)' = (n' d - n d') / d^2; cancel whole factors of d by exact division
  // first, so the ctor's gcd usually sees coprime operands.
  Polynomial num = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  if (den_.is_constant()) return RationalFunction(std::move(num), den_);
  int e = 2;
  while (e > 0 && !num.is_zero()) {
    auto q = num.divided_by(den_);
    if (!q) break;
    num = std::move(*q);
    --e;
  }
  return RationalFunction(std::move(num), den_.pow(e));
}

RationalFunction substitute_rational(
    const Polynomial& p, const std::map<std::string, RationalFunction>& repl) {
  // Assemble over one common denominator, prod_i D_i^{emax_i}, with no
  // intermediate reductions; the ctor reduces once at the end.
  const auto& vars = p.vars();
  const std::size_t k = vars.size();
  std::vector<const RationalFunction*> rep(k, nullptr);
  for (std::size_t i = 0; i < k; ++i) {
    const auto it = repl.find(vars[i]);
    if (it != repl.end()) rep[i] = &it->second;
  }
  std::vector<int> emax(k, 0);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < k; ++i)
      if (rep[i] && e[i] > emax[i]) emax[i] = e[i];
  std::vector<std::vector<Polynomial>> npow(k), dpow(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (!rep[i]) continue;
    npow[i].resize(emax[i] + 1, Polynomial(Scalar(1)));
    dpow[i].resize(emax[i] + 1, Polynomial(Scalar(1)));
    for (int t = 1; t <= emax[i]; ++t) {
      npow[i][t] = npow[i][t - 1] * rep[i]->num();
      dpow[i][t] = dpow[i][t - 1] * rep[i]->den();
    }
  }
  Polynomial num;
  for (const auto& [e, c] : p.terms()) {
    Polynomial term{Scalar(c)};
    for (std::size_t i = 0; i < k; ++i) {
      if (rep[i])
        term = term * npow[i][e[i]] * dpow[i][emax[i] - e[i]];
      else if (e[i] > 0)
        term = term * Polynomial::variable(vars[i]).pow(e[i]);
    }
    num = num + term;
  }
  // The denominator's factorization is known; cancel each factor out of the
  // numerator by exact division before handing the rest to the ctor's gcd.
  Polynomial den(Scalar(1));
  for (std::size_t i = 0; i < k; ++i) {
    if (!rep[i]) continue;
    int e = emax[i];
    const Polynomial& di = rep[i]->den();
    if (!di.is_constant() && !num.is_zero()) {
      while (e > 0) {
        auto q = num.divided_by(di);
        if (!q) break;
        num = std::move(*q);
        --e;
      }
    }
    if (e > 0) den = den * dpow[i][e];
  }
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction RationalFunction::substitute(
    const std::map<std::string, RationalFunction>& repl) const {
  const RationalFunction dn = substitute_rational(den_, repl);
  if (dn.is_zero())
    throw std::domain_error("substitution makes denominator vanish identically");
  return substitute_rational(num_, repl) / dn;
}

double RationalFunction::evaluate(const std::map<std::string, double>& point) const {
  const double d = den_.evaluate(point);
  if (d == 0.0) throw std::domain_error("rational function evaluated at pole");
  return num_.evaluate(point) / d;
}

Scalar RationalFunction::evaluate_exact(const std::map<std::string, Scalar>& point) const {
  const Scalar d = den_.evaluate_exact(point);
  if (d == 0) throw std::domain_error("rational function evaluated at pole");
  return num_.evaluate_exact(point) / d;
}

std::string RationalFunction::str() const {
  if (den_ == Polynomial(Scalar(1))) return num_.str();
  const bool np = num_.term_count() > 1;
  const bool dp = den_.term_count() > 1;
  std::string s;
  s += np ? "(" + num_.str() + ")" : num_.str();
  s += " / ";
  s += dp ? "(" + den_.str() + ")" : den_.str();
  return s;
}

}  // namespace wdvv
