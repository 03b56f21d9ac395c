#include "wdvv/hierarchy.hpp"

#include "wdvv/linalg.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace wdvv {

Mat<RationalFunction> flow_matrix(const FrobeniusSolution& s, const Calibration& cal,
                                  int alpha, int p) {
  if (cal.levels() < p + 1)
    throw std::invalid_argument("flow_matrix: calibration too shallow");
  const int n = s.n();
  Mat<RationalFunction> A(n, std::vector<RationalFunction>(n));
  for (int g = 1; g <= n; ++g) {
    const int nu = n + 1 - g;  // eta^{g,nu} antidiagonal
    for (int l = 1; l <= n; ++l)
      A[g - 1][l - 1] = RationalFunction(s.eta_inv(g, nu)) *
                        cal.th(alpha, p + 1).derivative(s.var(nu)).derivative(s.var(l));
  }
  return A;
}

double HodographSetup::ttilde(const TimeIndex& i) const {
  double v = 0.0;
  const auto t = times.find(i);
  if (t != times.end()) v = t->second;
  const auto c = shifts.find(i);
  if (c != shifts.end()) v -= scalar_to_double(c->second);
  return v;
}

std::vector<TimeIndex> HodographSetup::support() const {
  std::set<TimeIndex> keys;
  for (const auto& [k, v] : times) keys.insert(k);
  for (const auto& [k, v] : shifts) keys.insert(k);
  return {keys.begin(), keys.end()};
}

namespace {

std::map<std::string, double> point_of(const FrobeniusSolution& s,
                                       const std::vector<double>& v) {
  if (static_cast<int>(v.size()) != s.n())
    throw std::invalid_argument("point dimension mismatch");
  std::map<std::string, double> pt;
  for (int a = 1; a <= s.n(); ++a) pt[s.var(a)] = v[a - 1];
  return pt;
}

}  // namespace

std::vector<double> hodograph_residual(const FrobeniusSolution& s, const Calibration& cal,
                                       const HodographSetup& h,
                                       const std::vector<double>& v) {
  const auto pt = point_of(s, v);
  std::vector<double> r(s.n(), 0.0);
  for (const auto& idx : h.support()) {
    const double tt = h.ttilde(idx);
    if (tt == 0.0) continue;
    if (idx.second > cal.levels())
      throw std::invalid_argument("hodograph: calibration too shallow for time (" +
                                  std::to_string(idx.first) + "," +
                                  std::to_string(idx.second) + ")");
    for (int g = 1; g <= s.n(); ++g)
      r[g - 1] += tt * cal.th(idx.first, idx.second).derivative(s.var(g)).evaluate(pt);
  }
  return r;
}

std::optional<std::vector<double>> hodograph_solve(const FrobeniusSolution& s,
                                                   const Calibration& cal,
                                                   const HodographSetup& h,
                                                   std::vector<double> guess, double tol,
                                                   int max_iter) {
  const int n = s.n();
  for (int it = 0; it < max_iter; ++it) {
    const auto r = hodograph_residual(s, cal, h, guess);
    double norm = 0.0;
    for (double x : r) norm = std::max(norm, std::fabs(x));
    if (norm < tol) return guess;

    const auto pt = point_of(s, guess);
    Mat<double> J(n, std::vector<double>(n, 0.0));
    for (const auto& idx : h.support()) {
      const double tt = h.ttilde(idx);
      if (tt == 0.0) continue;
      for (int g = 1; g <= n; ++g)
        for (int l = 1; l <= n; ++l)
          J[g - 1][l - 1] += tt * cal.th(idx.first, idx.second)
                                      .derivative(s.var(g))
                                      .derivative(s.var(l))
                                      .evaluate(pt);
    }
    std::vector<double> rhs(n);
    for (int g = 0; g < n; ++g) rhs[g] = -r[g];
    const auto step = solve_double(J, rhs);
    if (!step) return std::nullopt;
    for (int g = 0; g < n; ++g) guess[g] += (*step)[g];
  }
  return std::nullopt;
}

double dlog_tau(const FrobeniusSolution& s, const OmegaTable& om, const HodographSetup& h,
                const std::vector<double>& v, int alpha, int p) {
  if (p >= om.P)
    throw std::invalid_argument("dlog_tau: Omega table too shallow");
  const auto pt = point_of(s, v);
  double acc = 0.0;
  for (const auto& idx : h.support()) {
    const double tt = h.ttilde(idx);
    if (tt == 0.0) continue;
    if (idx.second >= om.P)
      throw std::invalid_argument("dlog_tau: Omega table too shallow for time (" +
                                  std::to_string(idx.first) + "," +
                                  std::to_string(idx.second) + ")");
    acc += tt * om.at(alpha, p, idx.first, idx.second).evaluate(pt);
  }
  return acc;
}

double log_tau_genus0(const FrobeniusSolution& s, const OmegaTable& om,
                      const HodographSetup& h, const std::vector<double>& v) {
  const auto pt = point_of(s, v);
  double acc = 0.0;
  for (const auto& i : h.support()) {
    const double ti = h.ttilde(i);
    if (ti == 0.0) continue;
    for (const auto& j : h.support()) {
      const double tj = h.ttilde(j);
      if (tj == 0.0) continue;
      acc += 0.5 * ti * tj * om.at(i.first, i.second, j.first, j.second).evaluate(pt);
    }
  }
  return acc;
}

double check_tau_def(const FrobeniusSolution& s, const Calibration& cal,
                     const OmegaTable& om, const HodographSetup& h,
                     const std::vector<double>& v, double step, int sample_levels) {
  if (sample_levels > om.P)
    throw std::invalid_argument("check_tau_def: sample_levels exceeds Omega depth");
  const int n = s.n();

  // log tau at displaced times, re-solved from the base point
  auto tau_at = [&](const TimeIndex& i, double di, const TimeIndex& j, double dj) {
    HodographSetup moved = h;
    moved.times[i] += di;
    moved.times[j] += dj;
    auto sol = hodograph_solve(s, cal, moved, v);
    if (!sol) throw std::runtime_error("check_tau_def: hodograph re-solve failed");
    return log_tau_genus0(s, om, moved, *sol);
  };

  std::map<std::string, double> pt;
  for (int a = 1; a <= n; ++a) pt[s.var(a)] = v[a - 1];

  double worst = 0.0;
  std::vector<TimeIndex> idx;
  for (int a = 1; a <= n; ++a)
    for (int p = 0; p < sample_levels; ++p) idx.push_back({a, p});
  const double tau0 = log_tau_genus0(s, om, h, v);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i; j < idx.size(); ++j) {
      double fd;
      if (i == j) {
        fd = (tau_at(idx[i], step, idx[i], 0.0) - 2.0 * tau0 +
              tau_at(idx[i], -step, idx[i], 0.0)) /
             (step * step);
      } else {
        fd = (tau_at(idx[i], step, idx[j], step) - tau_at(idx[i], step, idx[j], -step) -
              tau_at(idx[i], -step, idx[j], step) +
              tau_at(idx[i], -step, idx[j], -step)) /
             (4.0 * step * step);
      }
      const double om_val =
          om.at(idx[i].first, idx[i].second, idx[j].first, idx[j].second).evaluate(pt);
      worst = std::max(worst, std::fabs(fd - om_val));
    }
  return worst;
}

}  // namespace wdvv
