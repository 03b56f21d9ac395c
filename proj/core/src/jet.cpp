#include "wdvv/jet.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wdvv {

std::string jet_var(int alpha, int order) {
  if (alpha < 1 || order < 0) throw std::invalid_argument("jet_var: bad indices");
  std::string s = "v" + std::to_string(alpha);
  if (order > 0) s += "_" + std::to_string(order);
  return s;
}

std::optional<JetVar> parse_jet_var(const std::string& name) {
  if (name.size() < 2 || name[0] != 'v') return std::nullopt;
  std::size_t i = 1;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
  if (i == 1) return std::nullopt;
  const int alpha = std::stoi(name.substr(1, i - 1));
  if (i == name.size()) return JetVar{alpha, 0};
  if (name[i] != '_' || i + 1 == name.size()) return std::nullopt;
  std::size_t j = i + 1;
  while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
  if (j != name.size()) return std::nullopt;
  return JetVar{alpha, std::stoi(name.substr(i + 1))};
}

const RationalFunction& JetExpr::rational() const {
  if (!is_rational()) throw std::logic_error("rational() on log-bearing expression");
  return base_;
}

void JetExpr::prune() {
  for (auto it = logs_.begin(); it != logs_.end();)
    it = (it->second.second == 0) ? logs_.erase(it) : std::next(it);
  for (auto it = log_primes_.begin(); it != log_primes_.end();)
    it = (it->second == 0) ? log_primes_.erase(it) : std::next(it);
}

void JetExpr::add_log_scalar(const Scalar& c, const Scalar& coeff) {
  Scalar v = c;
  if (v < 0) {
    log_m1_ += coeff;
    v = -v;
  }
  if (v == 1 || coeff == 0) return;
  const auto factor_into = [this](BigInt n, const Scalar& w) {
    for (BigInt d = 2; d * d <= n; ++d)
      while (n % d == 0) {
        log_primes_[d] += w;
        n /= d;
      }
    if (n > 1) log_primes_[n] += w;
  };
  factor_into(numerator(v), coeff);
  factor_into(denominator(v), -coeff);
}

void JetExpr::add_log_poly(Polynomial p, const Scalar& coeff) {
  if (p.is_zero()) throw std::domain_error("log of zero");
  if (coeff == 0) return;
  add_log_scalar(p.normalize_primitive(), coeff);
  if (p.is_constant()) return;  // primitive positive constant is 1

  // split off the monomial content (exponent-wise minimum over all terms)
  std::vector<int> mins(p.vars().size(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      mins[i] = first ? e[i] : std::min(mins[i], e[i]);
    first = false;
  }
  Polynomial mono(Scalar(1));
  for (std::size_t i = 0; i < mins.size(); ++i) {
    if (mins[i] == 0) continue;
    const Polynomial v = Polynomial::variable(p.vars()[i]);
    auto& slot = logs_[v.str()];
    slot.first = v;
    slot.second += coeff * Scalar(mins[i]);
    mono *= v.pow(mins[i]);
  }
  if (!mono.is_constant()) p = *p.divided_by(mono);
  if (!p.is_constant()) {
    auto& slot = logs_[p.str()];
    slot.first = p;
    slot.second += coeff;
  }
  prune();
}

void JetExpr::add_log(const RationalFunction& arg, const Scalar& coeff) {
  if (arg.is_zero()) throw std::domain_error("log of zero");
  add_log_poly(arg.num(), coeff);
  add_log_poly(arg.den(), -coeff);
}

JetExpr JetExpr::log(const RationalFunction& arg) {
  JetExpr e;
  e.add_log(arg, Scalar(1));
  return e;
}

JetExpr JetExpr::operator-() const { return *this * JetExpr(Scalar(-1)); }

JetExpr JetExpr::operator+(const JetExpr& o) const {
  JetExpr r = *this;
  r += o;
  return r;
}

JetExpr& JetExpr::operator+=(const JetExpr& o) {
  base_ += o.base_;
  for (const auto& [k, pv] : o.logs_) {
    auto& slot = logs_[k];
    slot.first = pv.first;
    slot.second += pv.second;
  }
  for (const auto& [p, c] : o.log_primes_) log_primes_[p] += c;
  log_m1_ += o.log_m1_;
  prune();
  return *this;
}

JetExpr JetExpr::operator-(const JetExpr& o) const { return *this + (-o); }

JetExpr& JetExpr::operator-=(const JetExpr& o) {
  *this += -o;
  return *this;
}

JetExpr JetExpr::operator*(const JetExpr& o) const {
  const JetExpr* plain = nullptr;
  const JetExpr* other = nullptr;
  if (is_rational()) {
    plain = this;
    other = &o;
  } else if (o.is_rational()) {
    plain = &o;
    other = this;
  } else {
    throw std::domain_error("product of two log-bearing expressions");
  }
  if (other->is_rational()) return JetExpr(plain->base_ * other->base_);
  if (!plain->base_.is_constant())
    throw std::domain_error("log-bearing expression scaled by non-constant");
  const Scalar c = plain->base_.constant_value();
  if (c == 0) return JetExpr();
  JetExpr r = *other;
  r.base_ = r.base_ * RationalFunction(c);
  for (auto& [k, pv] : r.logs_) pv.second *= c;
  for (auto& [p, w] : r.log_primes_) w *= c;
  r.log_m1_ *= c;
  return r;
}

JetExpr JetExpr::operator/(const JetExpr& o) const {
  if (!o.is_rational()) throw std::domain_error("division by log-bearing expression");
  if (o.base_.is_zero()) throw std::domain_error("division by zero expression");
  if (is_rational()) return JetExpr(base_ / o.base_);
  if (!o.base_.is_constant())
    throw std::domain_error("log-bearing expression divided by non-constant");
  return *this * JetExpr(Scalar(1) / o.base_.constant_value());
}

bool JetExpr::operator==(const JetExpr& o) const {
  if (base_ != o.base_ || log_m1_ != o.log_m1_ || log_primes_ != o.log_primes_)
    return false;
  if (logs_.size() != o.logs_.size()) return false;
  for (auto it = logs_.begin(), jt = o.logs_.begin(); it != logs_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second.second != jt->second.second) return false;
    if (it->second.first != jt->second.first) return false;
  }
  return true;
}

JetExpr JetExpr::derivative(const std::string& var) const {
  RationalFunction r = base_.derivative(var);
  for (const auto& [k, pv] : logs_) {
    const auto& [p, a] = pv;
    const Polynomial dp = p.derivative(var);
    if (!dp.is_zero()) r += RationalFunction(a) * RationalFunction(dp, p);
  }
  return JetExpr(r);
}

JetExpr JetExpr::substitute(const std::map<std::string, RationalFunction>& repl) const {
  JetExpr r(base_.substitute(repl));
  for (const auto& [k, pv] : logs_)
    r.add_log(substitute_rational(pv.first, repl), pv.second);
  for (const auto& [p, c] : log_primes_) r.log_primes_[p] += c;
  r.log_m1_ += log_m1_;
  r.prune();
  return r;
}

double JetExpr::evaluate(const std::map<std::string, double>& point) const {
  if (log_m1_ != 0) throw std::domain_error("evaluate: log(-1) term present");
  double acc = base_.evaluate(point);
  for (const auto& [k, pv] : logs_) {
    const double g = pv.first.evaluate(point);
    if (g <= 0.0) throw std::domain_error("evaluate: non-positive log argument");
    acc += scalar_to_double(pv.second) * std::log(g);
  }
  for (const auto& [p, c] : log_primes_)
    acc += scalar_to_double(c) * std::log(p.convert_to<double>());
  return acc;
}

std::vector<std::string> JetExpr::vars() const {
  std::vector<std::string> u = base_.vars();
  for (const auto& [k, pv] : logs_) {
    std::vector<std::string> m;
    std::set_union(u.begin(), u.end(), pv.first.vars().begin(), pv.first.vars().end(),
                   std::back_inserter(m));
    u = std::move(m);
  }
  return u;
}

std::string JetExpr::str() const {
  std::ostringstream out;
  out << base_.str();
  for (const auto& [k, pv] : logs_)
    out << " + (" << scalar_to_string(pv.second) << ")*log(" << k << ")";
  for (const auto& [p, c] : log_primes_)
    out << " + (" << scalar_to_string(c) << ")*log(" << p.str() << ")";
  if (log_m1_ != 0) out << " + (" << scalar_to_string(log_m1_) << ")*log(-1)";
  return out.str();
}

RationalFunction total_x_derivative(const RationalFunction& f) {
  RationalFunction acc;
  for (const auto& v : f.vars()) {
    const auto jv = parse_jet_var(v);
    if (!jv) throw std::invalid_argument("total_x_derivative: non-jet variable " + v);
    acc += f.derivative(v) * RationalFunction::variable(jet_var(jv->alpha, jv->order + 1));
  }
  return acc;
}

JetExpr total_x_derivative(const JetExpr& e) {
  RationalFunction acc = total_x_derivative(e.base());
  for (const auto& [k, pv] : e.log_terms()) {
    const auto& [p, a] = pv;
    acc += RationalFunction(a) * total_x_derivative(RationalFunction(p)) /
           RationalFunction(p);
  }
  return JetExpr(acc);
}

}  // namespace wdvv
