#include "wdvv/virasoro.hpp"

#include <stdexcept>

#include "wdvv/scalar.hpp"

namespace wdvv {

std::string time_var(int alpha, int p) {
  return "t" + std::to_string(alpha) + "_" + std::to_string(p);
}

VirasoroOperator virasoro_operator(const FrobeniusSolution& s, const Calibration& cal,
                                   int m, int max_level) {
  if (m != -1 && m != 0) throw std::invalid_argument("virasoro_operator: m must be -1 or 0");
  const int n = s.n();
  VirasoroOperator L;
  L.m = m;
  if (m == -1) {
    for (int a = 1; a <= n; ++a)
      for (int p = 1; p <= max_level; ++p)
        L.linear.emplace_back(TimeIndex{a, p}, TimeIndex{a, p - 1}, Scalar(1));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (s.eta(a, b) != 0)
          L.quadratic.emplace_back(TimeIndex{a, 0}, TimeIndex{b, 0}, s.eta(a, b) / 2);
    L.c0 = Scalar(0);
    return L;
  }
  // m == 0
  const int K = static_cast<int>(cal.R.size());
  for (int a = 1; a <= n; ++a)
    for (int p = 0; p <= max_level; ++p) {
      L.linear.emplace_back(TimeIndex{a, p}, TimeIndex{a, p},
                            Scalar(p) + Scalar(1, 2) + s.mu_at(a));
      for (int r = 1; r <= K && r <= p; ++r)
        for (int b = 1; b <= n; ++b) {
          Scalar c = cal.R_entry(r, b, a);
          if (c != 0) L.linear.emplace_back(TimeIndex{a, p}, TimeIndex{b, p - r}, c);
        }
    }
  for (int p = 0; p < K; ++p)
    for (int q = 0; p + q + 1 <= K; ++q)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          // (1/2)(-1)^q (R_{p+q+1})^xi_a eta_{xi,b}; eta is antidiagonal,
          // so only xi = n+1-b contributes.
          Scalar c = cal.R_entry(p + q + 1, n + 1 - b, a) * s.eta(n + 1 - b, b) / 2;
          if (q % 2 == 1) c = -c;
          if (c != 0) L.quadratic.emplace_back(TimeIndex{a, p}, TimeIndex{b, q}, c);
        }
  L.c0 = Scalar(0);
  for (int a = 1; a <= n; ++a) L.c0 += (Scalar(1, 4) - s.mu_at(a) * s.mu_at(a)) / 4;
  return L;
}

Polynomial virasoro_apply(const VirasoroOperator& L, const Polynomial& f) {
  Polynomial out;
  for (const auto& [from, to, c] : L.linear) {
    Polynomial df = f.derivative(time_var(to.first, to.second));
    if (df == Polynomial()) continue;
    out = out + Polynomial::variable(time_var(from.first, from.second)) * df * c;
  }
  for (const auto& [i, j, c] : L.quadratic)
    out = out + Polynomial::variable(time_var(i.first, i.second)) *
                    Polynomial::variable(time_var(j.first, j.second)) * f * c;
  out = out + f * L.c0;
  return out;
}

bool check_virasoro_commutator(const FrobeniusSolution& s, const Calibration& cal,
                               int P, std::string* why) {
  const int n = s.n();
  // f lives at levels < P; L_{-1} raises the time level of a monomial by one,
  // so enumerate operator terms up to P + 2.
  VirasoroOperator Lm1 = virasoro_operator(s, cal, -1, P + 2);
  VirasoroOperator L0 = virasoro_operator(s, cal, 0, P + 2);

  std::vector<Polynomial> basis;
  basis.push_back(Polynomial(Scalar(1)));
  std::vector<TimeIndex> idx;
  for (int a = 1; a <= n; ++a)
    for (int p = 0; p < P; ++p) idx.push_back({a, p});
  for (const auto& i : idx) basis.push_back(Polynomial::variable(time_var(i.first, i.second)));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i; j < idx.size(); ++j)
      basis.push_back(Polynomial::variable(time_var(idx[i].first, idx[i].second)) *
                      Polynomial::variable(time_var(idx[j].first, idx[j].second)));

  for (const auto& f : basis) {
    Polynomial g = virasoro_apply(Lm1, virasoro_apply(L0, f)) -
                   virasoro_apply(L0, virasoro_apply(Lm1, f)) +
                   virasoro_apply(Lm1, f);
    if (!(g == Polynomial())) {
      if (why) *why = "[L_{-1}, L_0] + L_{-1} != 0 on " + f.str() + ": got " + g.str();
      return false;
    }
  }
  return true;
}

double virasoro_residual(const FrobeniusSolution& s, const OmegaTable& om,
                         const HodographSetup& h, const VirasoroOperator& L,
                         const std::vector<double>& v) {
  (void)s;
  double res = 0.0;
  for (const auto& [from, to, c] : L.linear) {
    double t = h.ttilde(from);
    if (t == 0.0) continue;
    if (to.second >= om.P)
      throw std::invalid_argument("virasoro_residual: Omega table too shallow for d/dt^{" +
                                  std::to_string(to.first) + "," + std::to_string(to.second) +
                                  "}");
    res += scalar_to_double(c) * t * dlog_tau(s, om, h, v, to.first, to.second);
  }
  for (const auto& [i, j, c] : L.quadratic)
    res += scalar_to_double(c) * h.ttilde(i) * h.ttilde(j);
  return res;
}

}  // namespace wdvv
