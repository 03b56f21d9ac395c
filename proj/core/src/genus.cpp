#include "wdvv/genus.hpp"

#include <stdexcept>

namespace wdvv {

Mat<RationalFunction> dispersion_matrix(const FrobeniusSolution& s) {
  const int n = s.n();
  Mat<RationalFunction> M(n, std::vector<RationalFunction>(n));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      RationalFunction e;
      for (int g = 1; g <= n; ++g)
        e += s.c_lower(a, b, g) * RationalFunction::variable(jet_var(g, 1));
      M[a - 1][b - 1] = e;
    }
  return M;
}

JetExpr genus1_potential(const FrobeniusSolution& s, const JetExpr& G) {
  RationalFunction d = det(dispersion_matrix(s));
  if (d.is_zero())
    throw std::runtime_error("genus1_potential: det(c v_x) vanishes identically");
  return Scalar(1, 24) * JetExpr::log(d) + G;
}

JetExpr transform_G(const JetExpr& G, int n) {
  return G + (Scalar(n, 24) - Scalar(1, 2)) *
                 JetExpr::log(RationalFunction::variable("v" + std::to_string(n)));
}

namespace {

// base map on v1..vn extended to jets of order <= max_order by iterating
// v^g_{k} = dx_factor * D_x( v^g_{k-1} ).
std::map<std::string, RationalFunction> extend_to_jets(
    int n, const std::map<std::string, RationalFunction>& base,
    const RationalFunction& dx_factor, int max_order) {
  std::map<std::string, RationalFunction> out = base;
  for (int g = 1; g <= n; ++g) {
    RationalFunction cur = base.at("v" + std::to_string(g));
    for (int k = 1; k <= max_order; ++k) {
      cur = dx_factor * total_x_derivative(cur);
      out[jet_var(g, k)] = cur;
    }
  }
  return out;
}

int max_jet_order(const std::vector<std::string>& vars) {
  int m = 0;
  for (const auto& v : vars)
    if (auto jv = parse_jet_var(v)) m = std::max(m, jv->order);
  return m;
}

}  // namespace

std::map<std::string, RationalFunction> hat_jet_map(const FrobeniusSolution& s,
                                                    int max_order) {
  RationalFunction vn = RationalFunction::variable(s.var(s.n()));
  return extend_to_jets(s.n(), inversion_forward(s), RationalFunction(Scalar(1)) / vn,
                        max_order);
}

std::map<std::string, RationalFunction> unhat_jet_map(const FrobeniusSolution& s,
                                                      int max_order) {
  // here the variables name the hatted coordinates; D_x = (-1/vhat^n) D_xhat
  RationalFunction vhatn = RationalFunction::variable(s.var(s.n()));
  return extend_to_jets(s.n(), inversion_backward(s),
                        RationalFunction(Scalar(-1)) / vhatn, max_order);
}

bool check_det_identity(const FrobeniusSolution& s, std::string* why) {
  FrobeniusSolution shat = invert_solution(s);
  RationalFunction lhs = det(dispersion_matrix(shat)).substitute(hat_jet_map(s, 1)) *
                         RationalFunction::variable(s.var(s.n())).pow(s.n());
  RationalFunction rhs = det(dispersion_matrix(s));
  if (lhs != rhs) {
    if (why)
      *why = "det(chat vhat_xhat) (v^n)^n != det(c v_x): lhs = " + lhs.str() +
             ", rhs = " + rhs.str();
    return false;
  }
  return true;
}

bool check_genus1_transform(const FrobeniusSolution& s, const JetExpr& G,
                            std::string* why) {
  FrobeniusSolution shat = invert_solution(s);
  JetExpr F1 = genus1_potential(s, G);
  // F1hat pulled back to the original jets: the log-det part via the jet
  // substitution, and Ghat(vhat(v)) = G(v) + (n/24 - 1/2) log v^n by the
  // definition of the transformed G-function.
  auto sub = hat_jet_map(s, 1);
  JetExpr F1hat = Scalar(1, 24) *
                      JetExpr::log(det(dispersion_matrix(shat)).substitute(sub)) +
                  transform_G(G, s.n());
  RationalFunction vhatn_pulled =
      -(RationalFunction(Scalar(1)) / RationalFunction::variable(s.var(s.n())));
  JetExpr diff = F1 - F1hat + Scalar(1, 2) * JetExpr::log(vhatn_pulled);
  // constant in xhat <=> total x-derivative vanishes (D_xhat = (1/v^n) D_x)
  JetExpr d = total_x_derivative(diff);
  if (!d.is_zero()) {
    if (why)
      *why = "D_x(F1tilde - F1hat + (1/2) log vhat^n) = " + d.str() + ", expected 0";
    return false;
  }
  return true;
}

namespace {

// ordered tuples (j_1..j_k), j_i >= 1, sum = s
void compositions(int s, int k, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (s == 0) out.push_back(cur);
    return;
  }
  for (int j = 1; j <= s - (k - 1); ++j) {
    cur.push_back(j);
    compositions(s - j, k - 1, cur, out);
    cur.pop_back();
  }
}

Scalar factorial(int k) {
  Scalar f(1);
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

GenusSeries legendre_expand(const GenusSeries& series, const RationalFunction& vn,
                            const RationalFunction& dx_scale) {
  const int gmax = series.gmax();
  if (gmax == 0) return {};
  auto D = [&](const RationalFunction& f) { return dx_scale * total_x_derivative(f); };
  auto Dhat = [&](const RationalFunction& f) { return D(f) / vn; };

  // A_j = D F_j (the log parts differentiate to rational expressions)
  std::vector<RationalFunction> A(gmax + 1);
  for (int j = 1; j <= gmax; ++j) {
    JetExpr aj = total_x_derivative(series.F(j));
    A[j] = aj.rational() * dx_scale;
  }

  RationalFunction vhatn = -(RationalFunction(Scalar(1)) / vn);
  // Dhat^{k-2} vhat^n for k = 2..gmax
  std::vector<RationalFunction> dv(std::max(gmax + 1, 3));
  dv[2] = vhatn;
  for (int k = 3; k <= gmax; ++k) dv[k] = Dhat(dv[k - 1]);

  GenusSeries out;
  // DF[g][k] = Dhat^k Ftilde_g, k >= 1
  std::vector<std::vector<RationalFunction>> DF(gmax + 1);
  for (int m = 1; m <= gmax; ++m) {
    RationalFunction corr;
    for (int k = 2; k <= m; ++k) {
      std::vector<std::vector<int>> tuples;
      std::vector<int> cur;
      compositions(m, k, cur, tuples);
      for (const auto& t : tuples) {
        RationalFunction prod(Scalar(1));
        for (int j : t) prod *= A[j];
        corr -= RationalFunction(Scalar(1)) / RationalFunction(factorial(k)) * prod *
                dv[k];
      }
    }
    for (int g = 1; g < m; ++g)
      for (int k = 1; k <= m - g; ++k) {
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur;
        compositions(m - g, k, cur, tuples);
        for (const auto& t : tuples) {
          RationalFunction prod(Scalar(1));
          for (int j : t) prod *= A[j];
          corr -= RationalFunction(Scalar(1)) / RationalFunction(factorial(k)) * prod *
                  DF[g][k];
        }
      }
    JetExpr Fm = series.F(m) + JetExpr(corr);
    out.terms.push_back(Fm);
    // derivatives of Ftilde_m for later stages
    DF[m].assign(gmax - m + 1, RationalFunction());
    if (gmax - m >= 1) {
      JetExpr d1 = total_x_derivative(Fm);
      DF[m][1] = d1.rational() * dx_scale / vn;
      for (int k = 2; k <= gmax - m; ++k) DF[m][k] = Dhat(DF[m][k - 1]);
    }
  }
  return out;
}

GenusSeries legendre_expand(const GenusSeries& series, const RationalFunction& vn) {
  return legendre_expand(series, vn, RationalFunction(Scalar(1)));
}

RationalFunction genus2_correction(const RationalFunction& wn,
                                   const RationalFunction& dx_scale) {
  auto D = [&](const RationalFunction& f) { return dx_scale * total_x_derivative(f); };
  RationalFunction w1 = D(wn), w2 = D(w1);
  return w2 / (Scalar(8) * wn * wn) - w1 * w1 / (Scalar(12) * wn * wn * wn);
}

JetExpr check_genus2(const FrobeniusSolution& s, const JetExpr& G, const JetExpr& F2,
                     const JetExpr& F2hat) {
  RationalFunction vn = RationalFunction::variable(s.var(s.n()));
  GenusSeries series{{genus1_potential(s, G), F2}};
  GenusSeries tilde = legendre_expand(series, vn);

  RationalFunction whatn = -(RationalFunction(Scalar(1)) / vn);
  RationalFunction dxhat_scale = RationalFunction(Scalar(1)) / vn;
  RationalFunction G2 = genus2_correction(whatn, dxhat_scale);

  int ord = max_jet_order(F2hat.vars());
  JetExpr F2hat_pulled = F2hat.substitute(hat_jet_map(s, std::max(ord, 1)));
  return tilde.F(2) - F2hat_pulled - JetExpr(G2);
}

}  // namespace wdvv
