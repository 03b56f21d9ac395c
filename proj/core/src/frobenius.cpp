#include "wdvv/frobenius.hpp"

#include "wdvv/jet.hpp"

#include <sstream>
#include <stdexcept>

namespace wdvv {

namespace {

std::string idx3(int a, int b, int g) {
  std::ostringstream s;
  s << "(" << a << "," << b << "," << g << ")";
  return s.str();
}

}  // namespace

FrobeniusSolution::FrobeniusSolution(int n, RationalFunction F, Scalar d,
                                     std::vector<Scalar> mu)
    : n_(n), F_(std::move(F)), d_(std::move(d)), mu_(std::move(mu)) {
  if (n_ < 2) throw std::runtime_error("solution needs at least two fields");
  if (static_cast<int>(mu_.size()) != n_)
    throw std::runtime_error("spectrum size does not match field count");
  if (mu_[0] != -d_ / 2) throw std::runtime_error("mu_1 must equal -d/2");
  for (int a = 1; a <= n_; ++a)
    if (mu_at(a) + mu_at(n_ + 1 - a) != 0)
      throw std::runtime_error("spectrum is not antisymmetric: mu_" + std::to_string(a) +
                               " + mu_" + std::to_string(n_ + 1 - a) + " != 0");
  for (const auto& v : F_.vars()) {
    const auto jv = parse_jet_var(v);
    if (!jv || jv->order != 0 || jv->alpha < 1 || jv->alpha > n_)
      throw std::runtime_error("potential depends on unexpected variable " + v);
  }

  eta_.assign(n_, std::vector<Scalar>(n_, Scalar(0)));
  for (int a = 1; a <= n_; ++a)
    for (int b = a; b <= n_; ++b) {
      const RationalFunction e =
          F_.derivative(var(1)).derivative(var(a)).derivative(var(b));
      if (!e.is_constant())
        throw std::runtime_error("metric entry eta_" + std::to_string(a) +
                                 std::to_string(b) + " is not constant: " + e.str());
      eta_[a - 1][b - 1] = eta_[b - 1][a - 1] = e.constant_value();
    }
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b) {
      if (a + b == n_ + 1) {
        if (eta_[a - 1][b - 1] == 0)
          throw std::runtime_error("metric antidiagonal entry eta_" + std::to_string(a) +
                                   std::to_string(b) + " vanishes");
      } else if (eta_[a - 1][b - 1] != 0) {
        throw std::runtime_error("metric is not antidiagonal at eta_" + std::to_string(a) +
                                 std::to_string(b));
      }
    }
}

Scalar FrobeniusSolution::eta_inv(int a, int b) const {
  if (a + b != n_ + 1) return Scalar(0);
  return Scalar(1) / eta_[a - 1][b - 1];
}

RationalFunction FrobeniusSolution::c_lower(int a, int b, int g) const {
  return F_.derivative(var(a)).derivative(var(b)).derivative(var(g));
}

RationalFunction FrobeniusSolution::c_upper(int a, int b, int g) const {
  return c_lower(n_ + 1 - a, b, g) * eta_inv(a, n_ + 1 - a);
}

RationalFunction FrobeniusSolution::euler(const RationalFunction& f) const {
  RationalFunction acc;
  for (int a = 1; a <= n_; ++a)
    acc += RationalFunction(degree(a)) * RationalFunction::variable(var(a)) *
           f.derivative(var(a));
  return acc;
}

bool check_wdvv(const FrobeniusSolution& s, std::string* why) {
  const int n = s.n();
  const auto T = [&s, n](int a, int b, int g, int nu) {
    RationalFunction acc;
    for (int l = 1; l <= n; ++l) {
      const int m = n + 1 - l;  // eta^{lm} antidiagonal
      acc += s.c_lower(a, b, l) * RationalFunction(s.eta_inv(l, m)) * s.c_lower(m, g, nu);
    }
    return acc;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int g = b + 1; g <= n; ++g)
        for (int nu = 1; nu <= n; ++nu)
          if (T(a, b, g, nu) != T(a, g, b, nu)) {
            if (why)
              *why = "associativity fails at indices " + idx3(a, b, g) + " nu=" +
                     std::to_string(nu);
            return false;
          }
  return true;
}

bool check_quasihomogeneity(const FrobeniusSolution& s, std::string* why) {
  const RationalFunction disc =
      s.euler(s.F()) - RationalFunction(Scalar(3) - s.d()) * s.F();
  if (disc.is_zero()) return true;
  if (!disc.is_polynomial()) {
    if (why) *why = "Euler discrepancy is not polynomial: " + disc.str();
    return false;
  }
  const Polynomial p = disc.as_polynomial();
  if (p.total_degree() > 2) {
    if (why) *why = "Euler discrepancy has degree > 2: " + p.str();
    return false;
  }
  // each surviving correction term must be resonant (non-removable)
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> present;
    int total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      total += e[i];
      for (int k = 0; k < e[i]; ++k)
        present.push_back(parse_jet_var(p.vars()[i])->alpha);
    }
    Scalar mu_sum(0);
    for (int a : present) mu_sum += s.mu_at(a);
    // E(term) = (3-d)(term) forces: constant <=> d=3; linear v^a <=> deg_a = 3-d;
    // quadratic v^a v^b <=> mu_a + mu_b = -1
    bool resonant = false;
    if (total == 0) resonant = (s.d() == 3);
    if (total == 1) resonant = (s.degree(present[0]) == Scalar(3) - s.d());
    if (total == 2) resonant = (mu_sum == -1);
    if (!resonant) {
      if (why)
        *why = "non-resonant quasihomogeneity correction term in " + p.str();
      return false;
    }
  }
  return true;
}

std::vector<std::pair<std::vector<int>, Scalar>> generalized_terms(
    const RationalFunction& F, int n) {
  const Polynomial& den = F.den();
  if (den.term_count() != 1)
    throw std::runtime_error("potential denominator is not a monomial: " + den.str());
  const auto& [den_e, den_c] = *den.terms().begin();

  auto var_index = [n](const std::string& name) {
    const auto jv = parse_jet_var(name);
    if (!jv || jv->order != 0 || jv->alpha < 1 || jv->alpha > n)
      throw std::runtime_error("unexpected variable " + name + " in potential");
    return jv->alpha - 1;
  };

  std::vector<int> den_full(n, 0);
  for (std::size_t i = 0; i < den_e.size(); ++i)
    den_full[var_index(den.vars()[i])] = den_e[i];

  std::vector<std::pair<std::vector<int>, Scalar>> out;
  for (const auto& [e, c] : F.num().terms()) {
    std::vector<int> full(n, 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      full[var_index(F.num().vars()[i])] = e[i];
    for (int g = 0; g < n; ++g) full[g] -= den_full[g];
    out.emplace_back(std::move(full), c / den_c);
  }
  return out;
}

Spectrum infer_spectrum(int n, const RationalFunction& F) {
  const auto terms = generalized_terms(F, n);

  // unknowns: deg_2..deg_n and D = 3-d   (deg_1 = 1)
  Mat<Scalar> rows;
  std::vector<Scalar> rhs;
  for (const auto& [e, c] : terms) {
    bool quadratic = true;
    int total = 0;
    for (int g = 0; g < n; ++g) {
      if (e[g] < 0) quadratic = false;
      total += e[g];
    }
    if (quadratic && total <= 2) continue;  // removable normalization freedom
    std::vector<Scalar> row(n, Scalar(0));
    for (int g = 1; g < n; ++g) row[g - 1] = Scalar(e[g]);
    row[n - 1] = Scalar(-1);  // -D
    rows.push_back(std::move(row));
    rhs.push_back(Scalar(-e[0]));
  }
  if (rows.empty()) throw std::runtime_error("no grading constraints from potential");

  std::vector<int> free_cols;
  const auto x = solve_exact(rows, rhs, &free_cols);
  if (!x) throw std::runtime_error("potential admits no consistent grading");
  if (!free_cols.empty())
    throw std::runtime_error("grading is underdetermined by the potential");

  const Scalar D = (*x)[n - 1];
  Spectrum sp;
  sp.d = Scalar(3) - D;
  sp.mu.resize(n);
  std::vector<Scalar> deg(n + 1);
  deg[1] = Scalar(1);
  for (int a = 2; a <= n; ++a) deg[a] = (*x)[a - 2];
  for (int a = 1; a <= n; ++a) sp.mu[a - 1] = Scalar(1) - sp.d / 2 - deg[a];

  for (int a = 1; a <= n; ++a)
    if (sp.mu[a - 1] + sp.mu[n - a] != 0)
      throw std::runtime_error("inferred spectrum is not antisymmetric");

  // validation phase: leftover low-degree terms must be resonant
  FrobeniusSolution trial(n, F, sp.d, sp.mu);
  std::string why;
  if (!check_quasihomogeneity(trial, &why))
    throw std::runtime_error("inferred grading rejected: " + why);
  return sp;
}

}  // namespace wdvv
