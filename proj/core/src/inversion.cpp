#include "wdvv/inversion.hpp"

#include <stdexcept>

namespace wdvv {

namespace {

// (1/2) eta_{ab} v^a v^b
RationalFunction eta_quadratic(const FrobeniusSolution& s) {
  RationalFunction q;
  for (int a = 1; a <= s.n(); ++a)
    for (int b = 1; b <= s.n(); ++b) {
      if (s.eta(a, b) == 0) continue;
      q += RationalFunction(s.eta(a, b) / 2) *
           RationalFunction::variable(s.var(a)) * RationalFunction::variable(s.var(b));
    }
  return q;
}

}  // namespace

std::map<std::string, RationalFunction> inversion_forward(const FrobeniusSolution& s) {
  const int n = s.n();
  const RationalFunction vn = RationalFunction::variable(s.var(n));
  std::map<std::string, RationalFunction> m;
  m[s.var(1)] = eta_quadratic(s) / vn;
  for (int i = 2; i < n; ++i)
    m[s.var(i)] = RationalFunction::variable(s.var(i)) / vn;
  m[s.var(n)] = RationalFunction(Scalar(-1)) / vn;
  return m;
}

std::map<std::string, RationalFunction> inversion_backward(const FrobeniusSolution& s) {
  const int n = s.n();
  const RationalFunction vn = RationalFunction::variable(s.var(n));
  std::map<std::string, RationalFunction> m;
  // v^1 = (vhat^1 + (1/2) eta_{i,n+1-i} vhat^i vhat^{n+1-i} / vhat^n) / eta_{1n}
  RationalFunction acc = RationalFunction::variable(s.var(1));
  for (int i = 2; i < n; ++i)
    acc += RationalFunction(s.eta(i, n + 1 - i) / 2) *
           RationalFunction::variable(s.var(i)) *
           RationalFunction::variable(s.var(n + 1 - i)) / vn;
  m[s.var(1)] = acc / RationalFunction(s.eta(1, n));
  for (int i = 2; i < n; ++i)
    m[s.var(i)] = -RationalFunction::variable(s.var(i)) / vn;
  m[s.var(n)] = RationalFunction(Scalar(-1)) / vn;
  return m;
}

Spectrum inverted_spectrum(const FrobeniusSolution& s) {
  Spectrum sp;
  sp.d = Scalar(2) - s.d();
  sp.mu = s.mu();
  sp.mu.front() = s.d() / 2 - 1;
  sp.mu.back() = Scalar(1) - s.d() / 2;
  return sp;
}

FrobeniusSolution invert_solution(const FrobeniusSolution& s) {
  const RationalFunction vn = RationalFunction::variable(s.var(s.n()));
  const RationalFunction quad =
      RationalFunction::variable(s.var(1)) * eta_quadratic(s);
  const RationalFunction G = (s.F() - quad) / (vn * vn);
  const RationalFunction Fhat = G.substitute(inversion_backward(s));
  const Spectrum sp = inverted_spectrum(s);
  return FrobeniusSolution(s.n(), Fhat, sp.d, sp.mu);
}

bool same_up_to_quadratic(const FrobeniusSolution& a, const FrobeniusSolution& b) {
  if (a.n() != b.n()) return false;
  for (int x = 1; x <= a.n(); ++x)
    for (int y = x; y <= a.n(); ++y)
      for (int z = y; z <= a.n(); ++z)
        if (a.c_lower(x, y, z) != b.c_lower(x, y, z)) return false;
  return true;
}

}  // namespace wdvv
