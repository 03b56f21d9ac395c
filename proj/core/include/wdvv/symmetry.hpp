// How derived structures move under the inversion symmetry: calibration
// densities, the R matrices, the two-point table Omega, hierarchy times and
// flows, and the intersection form. Index bookkeeping used throughout, with
// phi(1) = n, phi(n) = 1, phi(i) = i in between and
// delta(a) = [a==1] - [a==n]:
//   thetahat_{1,0} = -1/v^n,
//   thetahat_{1,q} = -theta_{n,q-1}/v^n   (q >= 1),
//   thetahat_{i,q} =  theta_{i,q}/v^n,
//   thetahat_{n,q} =  theta_{1,q+1}/v^n,
// all composed with the backward coordinate change, and
//   (Rhat_k)^g_a = (-1)^{[g==1]+[a==1]} (R_{k+delta(g)-delta(a)})^{phi(g)}_{phi(a)}.
#pragma once

#include "wdvv/calibration.hpp"
#include "wdvv/hierarchy.hpp"
#include "wdvv/inversion.hpp"

#include <string>

namespace wdvv {

int phi_index(int a, int n);    // 1 <-> n, middles fixed
int delta_index(int a, int n);  // [a==1] - [a==n]

// Hatted calibration (levels reduced by one); needs cal.levels() >= 1.
Calibration transform_calibration(const FrobeniusSolution& s, const Calibration& cal);

// Verifies, for all p,q < P,
//   Omegahat_{a,p;b,q}(vhat(v)) ==
//     (-1)^{[a==1]+[b==1]} ( Omega_{phi(a),p-delta(a);phi(b),q-delta(b)}
//                            - (1/v^n) theta_... theta_... )
// with the sentinels theta_{n,-1} = 1, Omega_{*, -1} = 0 except
// Omega_{1,0;n,-1} = 1. Needs cal.levels() >= 2P+1.
bool check_omega_transform(const FrobeniusSolution& s, const Calibration& cal, int P,
                           std::string* why = nullptr);

// Time map on shifted times: ttildehat^{1,0} = hat_x (the value of
// dlogtau/dx), ttildehat^{1,p} = -ttilde^{n,p-1}, ttildehat^{n,p} =
// ttilde^{1,p+1}, middles unchanged. Returns a setup whose `times` hold the
// shifted values directly (shifts empty).
HodographSetup transform_times(const FrobeniusSolution& s, const HodographSetup& h,
                               double hat_x, int max_level);

// The hatted (alpha,p)-flow of vhat, pulled back, equals the chain-rule
// combination of unhatted flows and x-translation dictated by the time map
// (checked as an exact identity on jets). Needs cal.levels() >= p+2.
bool check_flow_correspondence(const FrobeniusSolution& s, const Calibration& cal,
                               int alpha, int p, std::string* why = nullptr);

// Intersection form g^{ab} = sum_g deg_g v^g c^{ab}_g and its consequences:
//  - lowering with the textbook Levi-Civita connection of g reproduces the
//    constant: sum_nu g^{i,nu} (-Gamma^n_{nu,k}) == ((1-d)/2) delta^i_k,
//  - the charge (1/2) g^{nn} == ((1-d)/2) v^n.
bool check_hessian_identity(const FrobeniusSolution& s, std::string* why = nullptr);

// (v^n)^2 etahat dvhat dvhat == eta dv dv and likewise for the intersection
// form of the inverted solution.
bool check_metric_covariance(const FrobeniusSolution& s, std::string* why = nullptr);

// contravariant intersection form entries
RationalFunction intersection_form(const FrobeniusSolution& s, int a, int b);

// d log tau / dx = sum ttilde^{alpha,p} theta_{alpha,p}(v); this is the value
// the time map installs in the hatted (1,0) slot.
double hat_x_of(const FrobeniusSolution& s, const Calibration& cal,
                const HodographSetup& h, const std::vector<double>& v);

// log tauhat = log tau - x * (d log tau / dx)
double legendre_tau(double logtau, double x, double dlogtau_dx);

// The transformed times solve the hatted hodograph system at vhat =
// forward(v): returns the infinity norm of that residual. v must solve the
// original system; needs cal.levels() >= (max time level) + 2 and the x-slot
// shift c^{1,0} = 0.
double check_prop51(const FrobeniusSolution& s, const Calibration& cal,
                    const HodographSetup& h, const std::vector<double>& v);

// |legendre_tau(log tau, x, hat_x) - log tauhat| with the right side summed
// from the hatted Omega table at depth Phat. Same preconditions as
// check_prop51, plus cal.levels() >= 2*Phat.
double check_legendre_two_sided(const FrobeniusSolution& s, const Calibration& cal,
                                const HodographSetup& h, const std::vector<double>& v,
                                int Phat);

// Same check, but the hatted side is summed from an externally supplied
// calibration of invert_solution(s) instead of transform_calibration(s, cal).
double check_legendre_two_sided(const FrobeniusSolution& s, const Calibration& cal,
                                const Calibration& calhat, const HodographSetup& h,
                                const std::vector<double>& v, int Phat);

}  // namespace wdvv
