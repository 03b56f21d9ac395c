#include "wdvv/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wdvv {

namespace {

// graded-lex: higher total degree wins, ties broken lexicographically on the
// exponent vector (variable lists must already agree).
bool grlex_less(const Polynomial::Exponents& a, const Polynomial::Exponents& b) {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

Polynomial::Polynomial(const Scalar& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Polynomial::Polynomial(long c) : Polynomial(Scalar(c)) {}

Polynomial Polynomial::variable(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  Polynomial p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Scalar(1));
  return p;
}

Polynomial Polynomial::monomial(const Scalar& c, const std::vector<std::string>& vars,
                                const Exponents& exps) {
  if (vars.size() != exps.size())
    throw std::invalid_argument("monomial: vars/exps size mismatch");
  Polynomial p(c);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (exps[i] < 0) throw std::invalid_argument("monomial: negative exponent");
    p *= Polynomial::variable(vars[i]).pow(exps[i]);
  }
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Scalar Polynomial::constant_value() const {
  if (terms_.empty()) return Scalar(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int Polynomial::degree_in(const std::string& var) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  const std::size_t i = static_cast<std::size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

void Polynomial::insert_term(const Exponents& e, const Scalar& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::trim() {
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

  std::vector<std::string> nv;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) {
      nv.push_back(vars_[i]);
      keep.push_back(i);
    }
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    Exponents ne(keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
    nt.emplace(std::move(ne), c);
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

void align(Polynomial& a, Polynomial& b) {
  if (a.vars_ == b.vars_) return;
  std::vector<std::string> u;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(u));
  auto remap = [&u](Polynomial& p) {
    std::vector<std::size_t> pos(p.vars_.size());
    for (std::size_t i = 0; i < p.vars_.size(); ++i)
      pos[i] = static_cast<std::size_t>(
          std::lower_bound(u.begin(), u.end(), p.vars_[i]) - u.begin());
    Polynomial::TermMap nt;
    for (const auto& [e, c] : p.terms_) {
      Polynomial::Exponents ne(u.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
      nt.emplace(std::move(ne), c);
    }
    p.vars_ = u;
    p.terms_ = std::move(nt);
  };
  remap(a);
  remap(b);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  Polynomial rhs = o;
  align(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial a = *this, b = o;
  align(a, b);
  Polynomial r;
  r.vars_ = a.vars_;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.insert_term(e, ca * cb);
    }
  r.trim();
  return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  if (c == 0) return Polynomial();
  Polynomial r = *this;
  for (auto& [e, k] : r.terms_) k *= c;
  return r;
}

Polynomial Polynomial::operator/(const Scalar& c) const {
  if (c == 0) throw std::domain_error("polynomial division by zero scalar");
  return *this * (Scalar(1) / c);
}

bool Polynomial::operator==(const Polynomial& o) const {
  Polynomial a = *this, b = o;
  align(a, b);
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::domain_error("Polynomial::pow: negative exponent");
  Polynomial r(Scalar(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

Polynomial Polynomial::derivative(const std::string& var) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return Polynomial();
  const std::size_t i = static_cast<std::size_t>(it - vars_.begin());
  Polynomial r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents ne = e;
    --ne[i];
    r.insert_term(ne, c * Scalar(e[i]));
  }
  r.trim();
  return r;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& repl) const {
  Polynomial acc;
  for (const auto& [e, c] : terms_) {
    Polynomial term(c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      const auto it = repl.find(vars_[i]);
      const Polynomial base = (it != repl.end()) ? it->second
                                                 : Polynomial::variable(vars_[i]);
      term *= base.pow(e[i]);
    }
    acc += term;
  }
  return acc;
}

double Polynomial::evaluate(const std::map<std::string, double>& point) const {
  std::vector<double> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = point.find(vars_[i]);
    if (it == point.end())
      throw std::invalid_argument("evaluate: missing value for " + vars_[i]);
    vals[i] = it->second;
  }
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = scalar_to_double(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= std::pow(vals[i], e[i]);
    acc += t;
  }
  return acc;
}

Scalar Polynomial::evaluate_exact(const std::map<std::string, Scalar>& point) const {
  std::vector<Scalar> vals(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = point.find(vars_[i]);
    if (it == point.end())
      throw std::invalid_argument("evaluate_exact: missing value for " + vars_[i]);
    vals[i] = it->second;
  }
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= scalar_pow(vals[i], e[i]);
    acc += t;
  }
  return acc;
}

Scalar Polynomial::content() const {
  Scalar g(0);
  for (const auto& [e, c] : terms_) g = scalar_gcd(g, c);
  return g;
}

std::pair<Polynomial::Exponents, Scalar> Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Scalar Polynomial::normalize_primitive() {
  if (terms_.empty()) return Scalar(1);
  Scalar f = content();
  if (leading_term().second < 0) f = -f;
  for (auto& [e, c] : terms_) c /= f;
  return f;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (divisor.is_constant()) return *this / divisor.constant_value();

  Polynomial r = *this, b = divisor;
  Polynomial q;
  while (!r.is_zero()) {
    align(r, b);  // subtraction may trim variables from r, so re-align
    const auto [eb, cb] = b.leading_term();
    const auto [er, cr] = r.leading_term();
    Exponents em(er.size());
    for (std::size_t i = 0; i < er.size(); ++i) {
      em[i] = er[i] - eb[i];
      if (em[i] < 0) return std::nullopt;  // leading term not divisible
    }
    Polynomial m;
    m.vars_ = r.vars_;
    m.terms_.emplace(em, cr / cb);
    q += m;
    r -= m * b;
  }
  q.trim();
  return q;
}

Polynomial Polynomial::coeff_of(const std::string& var, int k) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var)
    return (k == 0) ? *this : Polynomial();
  const std::size_t i = static_cast<std::size_t>(it - vars_.begin());
  Polynomial r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exponents ne = e;
    ne[i] = 0;
    r.insert_term(ne, c);
  }
  r.trim();
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // deterministic order: total degree descending, then lex descending
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return grlex_less(b->first, a->first);
  });

  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    const bool neg = c < 0;
    const Scalar mag = neg ? Scalar(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (mono.empty()) {
      out << scalar_to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << scalar_to_string(mag) << "*" << mono;
    }
  }
  return out.str();
}

}  // namespace wdvv
