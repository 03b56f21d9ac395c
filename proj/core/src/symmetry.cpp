#include "wdvv/symmetry.hpp"

#include "wdvv/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace wdvv {

int phi_index(int a, int n) { return (a == 1) ? n : (a == n) ? 1 : a; }
int delta_index(int a, int n) { return (a == 1 ? 1 : 0) - (a == n ? 1 : 0); }

namespace {

// theta_{g,s} extended by the sentinel theta_{n,-1} = 1
RationalFunction theta_ext(const FrobeniusSolution& s, const Calibration& cal, int g,
                           int p) {
  if (p == -1)
    return (g == s.n()) ? RationalFunction(Scalar(1)) : RationalFunction();
  return cal.th(g, p);
}

// Omega extended by the sentinels Omega_{*,-1} = 0 except Omega_{1,0;n,-1} = 1
RationalFunction omega_ext(const FrobeniusSolution& s, const OmegaTable& om, int a,
                           int p, int b, int q) {
  if (p == -1 || q == -1) {
    const bool exceptional = (p == -1 && a == s.n() && b == 1 && q == 0) ||
                             (q == -1 && b == s.n() && a == 1 && p == 0);
    return exceptional ? RationalFunction(Scalar(1)) : RationalFunction();
  }
  return om.at(a, p, b, q);
}

}  // namespace

Calibration transform_calibration(const FrobeniusSolution& s, const Calibration& cal) {
  if (cal.levels() < 1)
    throw std::invalid_argument("transform_calibration: need at least one level");
  const int n = s.n();
  const RationalFunction vn = RationalFunction::variable(s.var(n));
  const auto back = inversion_backward(s);

  Calibration hat;
  hat.n = n;
  hat.theta.assign(n, {});
  const int L = cal.levels() - 1;
  for (int alpha = 1; alpha <= n; ++alpha)
    for (int p = 0; p <= L; ++p) {
      RationalFunction in_v;  // thetahat as a function of the original v
      if (alpha == 1)
        in_v = (p == 0) ? RationalFunction(Scalar(-1)) / vn : -cal.th(n, p - 1) / vn;
      else if (alpha == n)
        in_v = cal.th(1, p + 1) / vn;
      else
        in_v = cal.th(alpha, p) / vn;
      hat.theta[alpha - 1].push_back(in_v.substitute(back));
    }

  const int K = static_cast<int>(cal.R.size());
  hat.R.assign(K + 2, Mat<Scalar>(n, std::vector<Scalar>(n, Scalar(0))));
  for (int k = 1; k <= K + 2; ++k)
    for (int g = 1; g <= n; ++g)
      for (int a = 1; a <= n; ++a) {
        const int j = k + delta_index(g, n) - delta_index(a, n);
        Scalar val = cal.R_entry(j, phi_index(g, n), phi_index(a, n));
        if ((g == 1) != (a == 1)) val = -val;  // (-1)^{[g==1]+[a==1]}
        hat.R[k - 1][g - 1][a - 1] = val;
      }
  while (!hat.R.empty()) {
    bool zero = true;
    for (const auto& row : hat.R.back())
      for (const auto& v : row)
        if (v != 0) zero = false;
    if (!zero) break;
    hat.R.pop_back();
  }
  return hat;
}

bool check_omega_transform(const FrobeniusSolution& s, const Calibration& cal, int P,
                           std::string* why) {
  const auto fail = [why](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (cal.levels() < 2 * P + 1)
    throw std::invalid_argument("check_omega_transform: calibration too shallow");
  const int n = s.n();
  const OmegaTable om = omega_table(s, cal, P + 1);
  const FrobeniusSolution shat = invert_solution(s);
  const Calibration calhat = transform_calibration(s, cal);
  const OmegaTable omhat = omega_table(shat, calhat, P);
  const auto fwd = inversion_forward(s);
  const RationalFunction inv_vn =
      RationalFunction(Scalar(1)) / RationalFunction::variable(s.var(n));

  for (int a = 1; a <= n; ++a)
    for (int p = 0; p < P; ++p)
      for (int b = 1; b <= n; ++b)
        for (int q = 0; q < P; ++q) {
          const int pa = phi_index(a, n), pb = phi_index(b, n);
          const int pp = p - delta_index(a, n), qq = q - delta_index(b, n);
          RationalFunction rhs =
              omega_ext(s, om, pa, pp, pb, qq) -
              inv_vn * theta_ext(s, cal, pa, pp) * theta_ext(s, cal, pb, qq);
          if ((a == 1) != (b == 1)) rhs = -rhs;
          const RationalFunction lhs = omhat.at(a, p, b, q).substitute(fwd);
          if (lhs != rhs)
            return fail("Omega transform fails at (" + std::to_string(a) + "," +
                        std::to_string(p) + ";" + std::to_string(b) + "," +
                        std::to_string(q) + ")");
        }
  return true;
}

HodographSetup transform_times(const FrobeniusSolution& s, const HodographSetup& h,
                               double hat_x, int max_level) {
  const int n = s.n();
  HodographSetup out;
  const auto put = [&out](int alpha, int p, double val) {
    if (val != 0.0) out.times[{alpha, p}] = val;
  };
  put(1, 0, hat_x);
  for (int p = 1; p <= max_level; ++p) put(1, p, -h.ttilde({n, p - 1}));
  for (int p = 0; p <= max_level; ++p) put(n, p, h.ttilde({1, p + 1}));
  for (int i = 2; i < n; ++i)
    for (int p = 0; p <= max_level; ++p) put(i, p, h.ttilde({i, p}));
  return out;
}

bool check_flow_correspondence(const FrobeniusSolution& s, const Calibration& cal,
                               int alpha, int p, std::string* why) {
  const auto fail = [why](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (cal.levels() < p + 2)
    throw std::invalid_argument("check_flow_correspondence: calibration too shallow");
  const int n = s.n();
  const FrobeniusSolution shat = invert_solution(s);
  const Calibration calhat = transform_calibration(s, cal);
  const auto fwd = inversion_forward(s);
  const RationalFunction vn = RationalFunction::variable(s.var(n));

  // pulled-back hatted flow: sum_l Ahat^g_l(vhat(v)) * (1/v^n) D_x vhat^l(v)
  const Mat<RationalFunction> Ahat = flow_matrix(shat, calhat, alpha, p);
  std::vector<RationalFunction> lhs(n);
  for (int g = 1; g <= n; ++g) {
    RationalFunction acc;
    for (int l = 1; l <= n; ++l)
      acc += Ahat[g - 1][l - 1].substitute(fwd) *
             total_x_derivative(fwd.at(s.var(l))) / vn;
    lhs[g - 1] = acc;
  }

  // unhatted flow (b,q) applied to vhat^g(v)
  const auto flow_applied = [&](int b, int q, int g) {
    const Mat<RationalFunction> A = flow_matrix(s, cal, b, q);
    RationalFunction acc;
    for (int l = 1; l <= n; ++l) {
      RationalFunction vl_t;  // (A v_x)^l
      for (int m = 1; m <= n; ++m)
        vl_t += A[l - 1][m - 1] * RationalFunction::variable(jet_var(m, 1));
      acc += fwd.at(s.var(g)).derivative(s.var(l)) * vl_t;
    }
    return acc;
  };

  for (int g = 1; g <= n; ++g) {
    const RationalFunction dx_vhat = total_x_derivative(fwd.at(s.var(g)));
    RationalFunction rhs;
    if (alpha == 1) {
      // -d_{t^{n,p-1}} + (theta_{n,p-1}/v^n) d_x  (sentinel theta_{n,-1} = 1)
      if (p >= 1) rhs = -flow_applied(n, p - 1, g);
      rhs += theta_ext(s, cal, n, p - 1) / vn * dx_vhat;
    } else if (alpha == n) {
      rhs = flow_applied(1, p + 1, g) - cal.th(1, p + 1) / vn * dx_vhat;
    } else {
      rhs = flow_applied(alpha, p, g) - cal.th(alpha, p) / vn * dx_vhat;
    }
    if (lhs[g - 1] != rhs)
      return fail("flow correspondence fails for component " + std::to_string(g) +
                  " of flow (" + std::to_string(alpha) + "," + std::to_string(p) + ")");
  }
  return true;
}

RationalFunction intersection_form(const FrobeniusSolution& s, int a, int b) {
  const int n = s.n();
  RationalFunction acc;
  for (int g = 1; g <= n; ++g) {
    // c^{ab}_g = eta^{a,mu} eta^{b,nu} c_{mu,nu,g}
    const RationalFunction c =
        RationalFunction(s.eta_inv(a, n + 1 - a) * s.eta_inv(b, n + 1 - b)) *
        s.c_lower(n + 1 - a, n + 1 - b, g);
    acc += RationalFunction(s.degree(g)) * RationalFunction::variable(s.var(g)) * c;
  }
  return acc;
}

bool check_hessian_identity(const FrobeniusSolution& s, std::string* why) {
  const auto fail = [why](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const int n = s.n();
  Mat<RationalFunction> gup(n, std::vector<RationalFunction>(n));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) gup[a - 1][b - 1] = intersection_form(s, a, b);

  const RationalFunction dg = det(gup);
  if (dg.is_zero()) return fail("intersection form is degenerate");
  const Mat<RationalFunction> adj = adjugate(gup);
  Mat<RationalFunction> glo(n, std::vector<RationalFunction>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) glo[a][b] = adj[a][b] / dg;

  // Gamma^l_{nu,k} = (1/2) g^{l,s} (d_nu g_{s,k} + d_k g_{s,nu} - d_s g_{nu,k})
  const auto christoffel = [&](int l, int nu, int k) {
    RationalFunction acc;
    for (int sig = 1; sig <= n; ++sig) {
      const RationalFunction t =
          glo[sig - 1][k - 1].derivative(s.var(nu)) +
          glo[sig - 1][nu - 1].derivative(s.var(k)) -
          glo[nu - 1][k - 1].derivative(s.var(sig));
      acc += gup[l - 1][sig - 1] * t;
    }
    return acc * RationalFunction(Scalar(1) / 2);
  };

  const Scalar c = (Scalar(1) - s.d()) / 2;
  const Scalar inv_e1n = Scalar(1) / s.eta(1, n);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) {
      RationalFunction acc;
      for (int nu = 1; nu <= n; ++nu)
        acc += gup[i - 1][nu - 1] * (-christoffel(n, nu, k));
      const RationalFunction expect =
          (i == k) ? RationalFunction(c * inv_e1n) : RationalFunction();
      if (acc != expect)
        return fail("lowered-connection identity fails at (i,k)=(" + std::to_string(i) +
                    "," + std::to_string(k) + ")");
    }

  // charge: (1/2) g^{nn} == ((1-d)/2) v^n / eta_{1n}
  const RationalFunction charge = gup[n - 1][n - 1] * RationalFunction(Scalar(1) / 2);
  if (charge != RationalFunction(c * inv_e1n) * RationalFunction::variable(s.var(n)))
    return fail("nonlocal charge mismatch: (1/2) g^{nn} != ((1-d)/2) v^n");
  return true;
}

bool check_metric_covariance(const FrobeniusSolution& s, std::string* why) {
  const auto fail = [why](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const int n = s.n();
  const FrobeniusSolution shat = invert_solution(s);
  const auto fwd = inversion_forward(s);
  const RationalFunction vn2 = RationalFunction::variable(s.var(n)).pow(2);
  const auto w = [](int l) { return RationalFunction::variable("w" + std::to_string(l)); };

  // differentials of the forward map contracted with w
  std::vector<RationalFunction> dv(n);
  for (int a = 1; a <= n; ++a) {
    RationalFunction acc;
    for (int l = 1; l <= n; ++l) acc += fwd.at(s.var(a)).derivative(s.var(l)) * w(l);
    dv[a - 1] = acc;
  }

  RationalFunction qhat_eta, q_eta;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (shat.eta(a, b) != 0)
        qhat_eta += RationalFunction(shat.eta(a, b)) * dv[a - 1] * dv[b - 1];
      if (s.eta(a, b) != 0) q_eta += RationalFunction(s.eta(a, b)) * w(a) * w(b);
    }
  if (vn2 * qhat_eta != q_eta) return fail("flat metric is not covariant");

  // lowered intersection forms on both sides
  const auto lowered = [n](const FrobeniusSolution& sol) {
    Mat<RationalFunction> gup(n, std::vector<RationalFunction>(n));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) gup[a - 1][b - 1] = intersection_form(sol, a, b);
    const RationalFunction dg = det(gup);
    Mat<RationalFunction> glo = adjugate(gup);
    for (auto& row : glo)
      for (auto& x : row) x = x / dg;
    return glo;
  };
  const Mat<RationalFunction> glo = lowered(s);
  const Mat<RationalFunction> glo_hat = lowered(shat);

  RationalFunction qhat_g, q_g;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      qhat_g += glo_hat[a - 1][b - 1].substitute(fwd) * dv[a - 1] * dv[b - 1];
      q_g += glo[a - 1][b - 1] * w(a) * w(b);
    }
  if (vn2 * qhat_g != q_g) return fail("intersection form is not covariant");
  return true;
}

double hat_x_of(const FrobeniusSolution& s, const Calibration& cal,
                const HodographSetup& h, const std::vector<double>& v) {
  std::map<std::string, double> pt;
  for (int a = 1; a <= s.n(); ++a) pt[s.var(a)] = v[a - 1];
  double acc = 0.0;
  for (const auto& idx : h.support()) {
    const double tt = h.ttilde(idx);
    if (tt == 0.0) continue;
    if (idx.second > cal.levels())
      throw std::invalid_argument("hat_x_of: calibration too shallow");
    acc += tt * cal.th(idx.first, idx.second).evaluate(pt);
  }
  return acc;
}

double legendre_tau(double logtau, double x, double dlogtau_dx) {
  return logtau - x * dlogtau_dx;
}

namespace {

int max_time_level(const HodographSetup& h) {
  int L = 0;
  for (const auto& idx : h.support())
    if (h.ttilde(idx) != 0.0) L = std::max(L, idx.second);
  return L;
}

std::vector<double> forward_point(const FrobeniusSolution& s,
                                  const std::vector<double>& v) {
  std::map<std::string, double> pt;
  for (int a = 1; a <= s.n(); ++a) pt[s.var(a)] = v[a - 1];
  const auto fwd = inversion_forward(s);
  std::vector<double> vhat(s.n());
  for (int a = 1; a <= s.n(); ++a) vhat[a - 1] = fwd.at(s.var(a)).evaluate(pt);
  return vhat;
}

}  // namespace

double check_prop51(const FrobeniusSolution& s, const Calibration& cal,
                    const HodographSetup& h, const std::vector<double>& v) {
  const FrobeniusSolution shat = invert_solution(s);
  const Calibration calhat = transform_calibration(s, cal);
  const double hx = hat_x_of(s, cal, h, v);
  const HodographSetup hhat = transform_times(s, h, hx, max_time_level(h) + 1);
  const auto r = hodograph_residual(shat, calhat, hhat, forward_point(s, v));
  double norm = 0.0;
  for (double x : r) norm = std::max(norm, std::fabs(x));
  return norm;
}

double check_legendre_two_sided(const FrobeniusSolution& s, const Calibration& cal,
                                const HodographSetup& h, const std::vector<double>& v,
                                int Phat) {
  return check_legendre_two_sided(s, cal, transform_calibration(s, cal), h, v, Phat);
}

double check_legendre_two_sided(const FrobeniusSolution& s, const Calibration& cal,
                                const Calibration& calhat, const HodographSetup& h,
                                const std::vector<double>& v, int Phat) {
  const FrobeniusSolution shat = invert_solution(s);
  const double hx = hat_x_of(s, cal, h, v);
  const HodographSetup hhat = transform_times(s, h, hx, max_time_level(h) + 1);
  const std::vector<double> vhat = forward_point(s, v);

  const OmegaTable om = omega_table(s, cal, max_time_level(h) + 1);
  const double left =
      legendre_tau(log_tau_genus0(s, om, h, v), h.ttilde({1, 0}), hx);
  const OmegaTable omhat = omega_table(shat, calhat, Phat);
  const double right = log_tau_genus0(shat, omhat, hhat, vhat);
  return std::fabs(left - right);
}

}  // namespace wdvv
