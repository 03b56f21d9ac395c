// Multivariate polynomial gcd via the subresultant pseudo-remainder sequence,
// recursing on contents one variable at a time.
#include "wdvv/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace wdvv {

namespace {

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto q = a.divided_by(b);
  if (!q) throw std::logic_error("gcd internals: inexact division");
  return *q;
}

// Pseudo-remainder of a by b in the variable x (deg_x a >= deg_x b >= 1):
// lc(b)^(da-db+1) * a = q*b + prem, with deg_x prem < deg_x b.
Polynomial prem(const Polynomial& a, const Polynomial& b, const std::string& x) {
  const int db = b.degree_in(x);
  const Polynomial lb = b.coeff_of(x, db);
  const int da = a.degree_in(x);
  const int needed = da - db + 1;
  Polynomial r = a;
  int count = 0;
  int dr;
  while (!r.is_zero() && (dr = r.degree_in(x)) >= db) {
    const Polynomial lr = r.coeff_of(x, dr);
    r = lb * r - lr * b * Polynomial::variable(x).pow(dr - db);
    ++count;
  }
  for (int i = count; i < needed; ++i) r *= lb;
  return r;
}

// monomial content: prod_i x_i^(min exponent of x_i across the terms)
Polynomial monomial_content(const Polynomial& p) {
  const auto& vars = p.vars();
  std::vector<int> mins;
  for (const auto& [e, c] : p.terms()) {
    if (mins.empty()) {
      mins = e;
      continue;
    }
    for (std::size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], e[i]);
  }
  Polynomial m(Scalar(1));
  for (std::size_t i = 0; i < mins.size(); ++i)
    if (mins[i] > 0) m = m * Polynomial::variable(vars[i]).pow(mins[i]);
  return m;
}

// content/primitive-part split with respect to one variable
std::pair<Polynomial, Polynomial> content_in(const Polynomial& p, const std::string& x) {
  const int d = p.degree_in(x);
  Polynomial cont;
  for (int k = 0; k <= d; ++k) {
    const Polynomial ck = p.coeff_of(x, k);
    if (ck.is_zero()) continue;
    cont = poly_gcd(cont, ck);
    if (cont.is_constant()) break;
  }
  if (cont.is_constant()) cont = Polynomial(Scalar(1));
  return {cont, exact_div(p, cont)};
}

// --- constant-gcd certificate ------------------------------------------
// Let g = gcd(a, b) and phi evaluate every variable except x at fixed
// rationals. lc_x(g) divides lc_x(a) and lc_x(b), so whenever one of the
// image leading coefficients survives, deg_x phi(g) = deg_x g, and phi(g)
// divides gcd(phi(a), phi(b)). A degree-0 univariate image gcd therefore
// proves deg_x g = 0. Since vars(g) lies in the shared variables, proving
// this for each of them certifies that g is constant — the common case —
// for the cost of a few univariate gcds.

// dense univariate polynomial over Scalar, coefficients low to high
using UniPoly = std::vector<Scalar>;

void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int uni_gcd_degree(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    // a mod b, with b made monic
    const Scalar lead = b.back();
    for (auto& c : b) c /= lead;
    for (int k = static_cast<int>(a.size()) - static_cast<int>(b.size()); k >= 0;
         --k) {
      const Scalar q = a[k + b.size() - 1];
      if (q == 0) continue;
      for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q * b[i];
    }
    a.resize(std::min(a.size(), b.size() - 1));
    uni_trim(a);
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// phi(p) as a univariate polynomial in x; vals aligned with p.vars()
UniPoly eval_image(const Polynomial& p, const std::string& x,
                   const std::vector<Scalar>& vals) {
  const auto& vars = p.vars();
  std::vector<std::vector<Scalar>> pw(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == x) continue;
    pw[i].assign(1, Scalar(1));
  }
  UniPoly out(p.degree_in(x) + 1, Scalar(0));
  for (const auto& [e, c] : p.terms()) {
    Scalar t = c;
    int dx = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == x) {
        dx = e[i];
        continue;
      }
      auto& table = pw[i];
      while (static_cast<int>(table.size()) <= e[i])
        table.push_back(table.back() * vals[i]);
      t *= table[e[i]];
    }
    out[dx] += t;
  }
  return out;
}

bool certified_coprime(const Polynomial& a, const Polynomial& b,
                       const std::vector<std::string>& shared) {
  for (const auto& x : shared) {
    bool settled = false;
    for (unsigned attempt = 0; attempt < 4 && !settled; ++attempt) {
      auto values_for = [&](const Polynomial& p) {
        const auto& vars = p.vars();
        std::vector<Scalar> vals(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
          // deterministic, per-variable-name point
          unsigned h = 2166136261u;
          for (char ch : vars[i]) h = (h ^ static_cast<unsigned char>(ch)) * 16777619u;
          vals[i] = Scalar(2 + (h * 31u + attempt * 1103515245u + 12345u) % 47);
        }
        return vals;
      };
      UniPoly ia = eval_image(a, x, values_for(a));
      UniPoly ib = eval_image(b, x, values_for(b));
      if ((ia.empty() || ia.back() == 0) && (ib.empty() || ib.back() == 0))
        continue;  // both leading coefficients vanished: point uninformative
      uni_trim(ia);
      uni_trim(ib);
      if (ia.empty() || ib.empty()) continue;  // an image collapsed entirely
      if (uni_gcd_degree(std::move(ia), std::move(ib)) == 0) settled = true;
    }
    if (!settled) return false;
  }
  return true;
}

// Subresultant PRS on x-primitive inputs that both depend on x; returns the
// x-primitive gcd (content in x of the inputs is handled by the caller).
Polynomial subresultant_prs(Polynomial a, Polynomial b, const std::string& x) {
  if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
  int delta = a.degree_in(x) - b.degree_in(x);
  Polynomial beta(Scalar((delta % 2 == 0) ? -1 : 1));  // (-1)^(delta+1)
  Polynomial psi(Scalar(-1));
  for (;;) {
    Polynomial r = prem(a, b, x);
    if (r.is_zero()) break;
    r = exact_div(r, beta);
    if (r.degree_in(x) == 0) return Polynomial(Scalar(1));
    const Polynomial lb = b.coeff_of(x, b.degree_in(x));
    if (delta >= 1) psi = exact_div((-lb).pow(delta), psi.pow(delta - 1));
    const int delta_next = b.degree_in(x) - r.degree_in(x);
    beta = -lb * psi.pow(delta_next);
    a = b;
    b = r;
    delta = delta_next;
  }
  return content_in(b, x).second;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) {
    Polynomial r = b;
    r.normalize_primitive();
    return r;
  }
  if (b.is_zero()) {
    Polynomial r = a;
    r.normalize_primitive();
    return r;
  }
  Polynomial pa = a, pb = b;
  pa.normalize_primitive();
  pb.normalize_primitive();
  if (pa.is_constant() || pb.is_constant()) return Polynomial(Scalar(1));

  // Split off the monomial content first: its gcd is exact min exponents, and
  // a pure-monomial operand never has to reach the pseudo-remainder sequence
  // (where a large degree gap makes the lc^delta scaling explode).
  const Polynomial ma = monomial_content(pa);
  const Polynomial mb = monomial_content(pb);
  Polynomial gm(Scalar(1));
  if (!ma.is_constant() || !mb.is_constant()) {
    pa = exact_div(pa, ma);
    pb = exact_div(pb, mb);
    const auto& ea = ma.terms().begin()->first;
    const auto& eb = mb.terms().begin()->first;
    for (std::size_t i = 0; i < ma.vars().size(); ++i) {
      if (ea[i] == 0) continue;
      for (std::size_t j = 0; j < mb.vars().size(); ++j)
        if (mb.vars()[j] == ma.vars()[i] && eb[j] > 0)
          gm = gm * Polynomial::variable(ma.vars()[i]).pow(std::min(ea[i], eb[j]));
    }
    if (pa.is_constant() || pb.is_constant()) return gm;
  }

  std::vector<std::string> shared;
  std::set_intersection(pa.vars().begin(), pa.vars().end(), pb.vars().begin(),
                        pb.vars().end(), std::back_inserter(shared));
  if (shared.empty()) return gm;

  if (certified_coprime(pa, pb, shared)) return gm;

  // main variable: smallest combined degree keeps the PRS short
  std::string x = shared.front();
  int best = pa.degree_in(x) + pb.degree_in(x);
  for (const auto& v : shared) {
    const int d = pa.degree_in(v) + pb.degree_in(v);
    if (d < best) {
      best = d;
      x = v;
    }
  }

  const auto [ca, ppa] = content_in(pa, x);
  const auto [cb, ppb] = content_in(pb, x);
  Polynomial g = gm * poly_gcd(ca, cb) * subresultant_prs(ppa, ppb, x);
  g.normalize_primitive();
  return g;
}

}  // namespace wdvv
