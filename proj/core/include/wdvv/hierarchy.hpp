// The dispersionless integrable hierarchy attached to a calibrated solution:
// commuting flows dv/dt^{alpha,p}, the hodograph construction of the common
// solution v(x, t), and the genus-zero tau function
//   log tau = (1/2) sum ttilde^{alpha,p} ttilde^{beta,q} Omega_{alpha,p;beta,q}(v(t)),
// where ttilde^{alpha,p} = t^{alpha,p} - c^{alpha,p} for constant shifts c
// (the coordinate x enters through t^{1,0}).
#pragma once

#include "wdvv/calibration.hpp"

#include <map>
#include <optional>
#include <utility>

namespace wdvv {

using TimeIndex = std::pair<int, int>;  // (alpha, p)

// v^g_t = A^g_l v^l_x with A^g_l = eta^{g,nu} d_nu d_l theta_{alpha,p+1};
// needs cal.levels() >= p+1.
Mat<RationalFunction> flow_matrix(const FrobeniusSolution& s, const Calibration& cal,
                                  int alpha, int p);

struct HodographSetup {
  std::map<TimeIndex, Scalar> shifts;  // c^{alpha,p}
  std::map<TimeIndex, double> times;   // t^{alpha,p}

  double ttilde(const TimeIndex& i) const;
  // all indices with a time or shift entry
  std::vector<TimeIndex> support() const;
};

// residual_g(v) = sum_{alpha,p} ttilde^{alpha,p} d_g theta_{alpha,p}(v)
std::vector<double> hodograph_residual(const FrobeniusSolution& s, const Calibration& cal,
                                       const HodographSetup& h,
                                       const std::vector<double>& v);

// Newton iteration on the residual; returns the solution point or nullopt.
std::optional<std::vector<double>> hodograph_solve(const FrobeniusSolution& s,
                                                   const Calibration& cal,
                                                   const HodographSetup& h,
                                                   std::vector<double> guess,
                                                   double tol = 1e-13,
                                                   int max_iter = 80);

// d log tau / d t^{alpha,p} = sum_{beta,q} ttilde^{beta,q} Omega_{alpha,p;beta,q}(v)
double dlog_tau(const FrobeniusSolution& s, const OmegaTable& om, const HodographSetup& h,
                const std::vector<double>& v, int alpha, int p);

double log_tau_genus0(const FrobeniusSolution& s, const OmegaTable& om,
                      const HodographSetup& h, const std::vector<double>& v);

// The defining property of the tau function: second time-derivatives of
// log tau, taken by centered finite differences of step `step` (re-solving
// the hodograph system at each displaced time), reproduce
// Omega_{alpha,p;beta,q}(v(t)). Returns the max absolute deviation over all
// index pairs with p, q < sample_levels (<= om.P). v must already solve the
// hodograph system for h.
double check_tau_def(const FrobeniusSolution& s, const Calibration& cal,
                     const OmegaTable& om, const HodographSetup& h,
                     const std::vector<double>& v, double step, int sample_levels);

}  // namespace wdvv
