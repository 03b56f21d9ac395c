// Command-line front end: exact WDVV solution checks, the inversion map,
// calibrations, hodograph tau functions, Legendre-type two-sided comparisons,
// Virasoro residuals, and the genus-expansion identities.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
// parse error.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wdvv/calibration.hpp"
#include "wdvv/frobenius.hpp"
#include "wdvv/genus.hpp"
#include "wdvv/hierarchy.hpp"
#include "wdvv/inversion.hpp"
#include "wdvv/io.hpp"
#include "wdvv/parser.hpp"
#include "wdvv/symmetry.hpp"
#include "wdvv/virasoro.hpp"

namespace {

using namespace wdvv;

// ---------------------------------------------------------------------------
// reporting

struct CheckRow {
  std::string name;
  std::string mode;      // "symbolic" or "numeric"
  std::string residual;  // "0", a number, or a short reason
  std::string tol;       // "exact" or a number
  bool pass = false;
  bool skipped = false;
};

struct Report {
  std::string command;
  std::vector<CheckRow> rows;
  bool tsv = false;

  void add(const std::string& name, const std::string& mode,
           const std::string& residual, const std::string& tol, bool pass) {
    rows.push_back({name, mode, residual, tol, pass, false});
  }
  void add_symbolic(const std::string& name, bool pass,
                    const std::string& why = "") {
    add(name, "symbolic", pass ? "0" : (why.empty() ? "nonzero" : why), "exact",
        pass);
  }
  void add_numeric(const std::string& name, double residual, double tol) {
    add(name, "numeric", format_double(residual), format_double(tol),
        residual <= tol);
  }
  void skip(const std::string& name, const std::string& reason) {
    rows.push_back({name, "symbolic", reason, "-", true, true});
  }

  static std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6e", x);
    return buf;
  }

  bool ok() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const CheckRow& r) { return r.pass; });
  }

  int finish() const {
    std::ostringstream out;
    out << "# " << command << "\n";
    if (tsv) {
      out << "check\tmode\tresidual\ttolerance\tpass\n";
      for (const auto& r : rows)
        out << r.name << "\t" << r.mode << "\t" << r.residual << "\t" << r.tol
            << "\t" << (r.skipped ? "skipped" : (r.pass ? "1" : "0")) << "\n";
    } else {
      std::size_t w_name = 4, w_mode = 4, w_res = 8, w_tol = 9;
      for (const auto& r : rows) {
        w_name = std::max(w_name, r.name.size());
        w_mode = std::max(w_mode, r.mode.size());
        w_res = std::max(w_res, r.residual.size());
        w_tol = std::max(w_tol, r.tol.size());
      }
      auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size() + 2, ' ');
      };
      for (const auto& r : rows)
        out << pad(r.name, w_name) << pad(r.mode, w_mode) << pad(r.residual, w_res)
            << pad(r.tol, w_tol)
            << (r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL")) << "\n";
      int passed = 0;
      for (const auto& r : rows) passed += r.pass ? 1 : 0;
      out << "RESULT " << (ok() ? "PASS" : "FAIL") << " (" << passed << "/"
          << rows.size() << " checks)\n";
    }
    std::cout << out.str();
    return ok() ? 0 : 1;
  }
};

// ---------------------------------------------------------------------------
// argument helpers

[[noreturn]] void usage_error(const std::string& msg) {
  throw CLI::ValidationError(msg);
}

Scalar scalar_arg(const std::string& text) {
  try {
    return parse_scalar(text);
  } catch (const std::exception& e) {
    usage_error("bad rational '" + text + "': " + e.what());
  }
}

// "a,p=value" -> ((a, p), value-text)
std::pair<TimeIndex, std::string> split_assign(const std::string& text) {
  const size_t eq = text.find('=');
  if (eq == std::string::npos) usage_error("expected a,p=value in '" + text + "'");
  const std::string lhs = text.substr(0, eq);
  const size_t comma = lhs.find(',');
  if (comma == std::string::npos)
    usage_error("expected a,p=value in '" + text + "'");
  try {
    const int a = std::stoi(lhs.substr(0, comma));
    const int p = std::stoi(lhs.substr(comma + 1));
    if (a < 1 || p < 0) usage_error("index out of range in '" + text + "'");
    return {{a, p}, text.substr(eq + 1)};
  } catch (const CLI::Error&) {
    throw;
  } catch (const std::exception&) {
    usage_error("bad index in '" + text + "'");
  }
}

HodographSetup setup_from_flags(const std::vector<std::string>& shifts,
                                const std::vector<std::string>& times) {
  HodographSetup h;
  for (const auto& s : shifts) {
    auto [idx, val] = split_assign(s);
    h.shifts[idx] = scalar_arg(val);
  }
  for (const auto& t : times) {
    auto [idx, val] = split_assign(t);
    try {
      h.times[idx] = std::stod(val);
    } catch (const std::exception&) {
      usage_error("bad number '" + val + "'");
    }
  }
  if (h.shifts.empty() && h.times.empty())
    usage_error("give at least one --shift or --time");
  return h;
}

// The standard exactly-solvable configuration: with the single shift
// c^{1,1} = 1 the hodograph system degenerates to v^alpha = t^{alpha,0}.
HodographSetup default_setup(int n) {
  HodographSetup h;
  h.shifts[{1, 1}] = Scalar(1);
  for (int a = 1; a <= n; ++a)
    h.times[{a, 0}] = 0.1 + 0.2 * (a == 1) + 0.05 * (a == n);
  return h;
}

int max_level(const HodographSetup& h) {
  int m = 0;
  for (const auto& i : h.support()) m = std::max(m, i.second);
  return m;
}

std::vector<double> guess_from_flags(const std::string& guess_text,
                                     const HodographSetup& h, int n) {
  if (!guess_text.empty()) {
    std::vector<double> g;
    std::stringstream ss(guess_text);
    std::string item;
    while (std::getline(ss, item, ','))
      try {
        g.push_back(std::stod(item));
      } catch (const std::exception&) {
        usage_error("bad --guess entry '" + item + "'");
      }
    if (static_cast<int>(g.size()) != n)
      usage_error("--guess needs exactly " + std::to_string(n) + " numbers");
    return g;
  }
  // default: the t^{alpha,0} values (exact for the degenerate configuration)
  std::vector<double> g(n, 0.1);
  for (int a = 1; a <= n; ++a) {
    auto it = h.times.find({a, 0});
    if (it != h.times.end() && it->second != 0.0) g[a - 1] = it->second;
  }
  return g;
}

// ---------------------------------------------------------------------------
// calibration-file plumbing
//
// A calibration file is a solution file followed by `[theta ...]` /
// `[R ...]` sections; a plain solution file is accepted wherever one is
// expected, in which case the calibration is built on the fly at level P.

struct Calibrated {
  SolutionFile file;
  FrobeniusSolution sol;
  Calibration cal;
};

Calibrated load_calibrated(const std::string& path, int P) {
  const std::string text = read_file(path);
  std::string sol_text, cal_text;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    const size_t at = line.find_first_not_of(" \t");
    if (at != std::string::npos && line[at] == '[')
      cal_text += line + "\n";
    else
      sol_text += line + "\n";
  }
  SolutionFile f = parse_solution_text(sol_text);
  if (!f.conformal())
    throw std::runtime_error(path + ": calibrations need conformal data (d, mu)");
  FrobeniusSolution s = f.solution();
  Calibration cal;
  if (cal_text.empty()) {
    cal = build_calibration(s, P);
  } else {
    cal = calibration_from_text("n = " + std::to_string(f.n) + "\n" + cal_text);
  }
  return {std::move(f), std::move(s), std::move(cal)};
}

std::string calibrated_to_text(const SolutionFile& f, const Calibration& cal) {
  std::string cal_text = calibration_to_text(cal);
  // drop the leading `n = ...` line: the solution part already carries it
  const size_t nl = cal_text.find('\n');
  if (nl != std::string::npos) cal_text = cal_text.substr(nl + 1);
  return solution_to_text(f) + cal_text;
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_check(const std::string& path, bool tsv) {
  Report rep;
  rep.command = "wdvv check " + path;
  rep.tsv = tsv;
  const SolutionFile f = load_solution(path);
  std::string why;
  if (f.conformal()) {
    const FrobeniusSolution s = f.solution();
    rep.add_symbolic("wdvv-associativity", check_wdvv(s, &why), why);
    rep.add_symbolic("quasi-homogeneity", check_quasihomogeneity(s, &why), why);
  } else {
    const FrobeniusSolution s = f.wdvv_only();
    rep.add_symbolic("wdvv-associativity", check_wdvv(s, &why), why);
    rep.skip("quasi-homogeneity", "no (d, mu) in file");
  }
  return rep.finish();
}

int cmd_invert(const std::string& path, const std::string& out_path, bool tsv) {
  Report rep;
  rep.command = "wdvv invert " + path + " -o " + out_path;
  rep.tsv = tsv;
  const SolutionFile f = load_solution(path);
  if (!f.conformal())
    throw std::runtime_error(path + ": inversion needs conformal data (d, mu)");
  const FrobeniusSolution s = f.solution();
  const FrobeniusSolution shat = invert_solution(s);
  SolutionFile out;
  out.n = shat.n();
  out.F = shat.F();
  out.d = shat.d();
  out.mu = shat.mu();
  save_solution(out_path, out);
  std::string why;
  rep.add_symbolic("inverse-wdvv", check_wdvv(shat, &why), why);
  rep.add_symbolic("inverse-quasi-homogeneity", check_quasihomogeneity(shat, &why),
                   why);
  return rep.finish();
}

int cmd_calibrate(const std::string& path, int P, const std::string& out_path,
                  bool tsv) {
  Report rep;
  rep.command = "wdvv calibrate " + path + " -P " + std::to_string(P);
  rep.tsv = tsv;
  const SolutionFile f = load_solution(path);
  if (!f.conformal())
    throw std::runtime_error(path + ": calibrations need conformal data (d, mu)");
  const FrobeniusSolution s = f.solution();
  const Calibration cal = build_calibration(s, P);
  std::string why;
  rep.add_symbolic("calibration-axioms", check_calibration(s, cal, &why), why);
  if (!out_path.empty()) write_file(out_path, calibrated_to_text(f, cal));
  return rep.finish();
}

int cmd_hodograph(const std::string& path, int P,
                  const std::vector<std::string>& shifts,
                  const std::vector<std::string>& times,
                  const std::string& guess_text, double tol, bool tsv) {
  Report rep;
  rep.tsv = tsv;
  rep.command = "wdvv hodograph " + path;
  const HodographSetup h = setup_from_flags(shifts, times);
  const int L = std::max(P, 2 * (max_level(h) + 1) - 1);
  const Calibrated c = load_calibrated(path, L);
  if (c.cal.levels() < L)
    throw std::runtime_error(path + ": calibration too shallow (need level " +
                             std::to_string(L) + ")");
  const auto v =
      hodograph_solve(c.sol, c.cal, h, guess_from_flags(guess_text, h, c.file.n));
  if (!v) {
    rep.add("hodograph-newton", "numeric", "no convergence",
            Report::format_double(tol), false);
    return rep.finish();
  }
  const auto res = hodograph_residual(c.sol, c.cal, h, *v);
  double rmax = 0;
  for (double r : res) rmax = std::max(rmax, std::fabs(r));
  rep.add_numeric("hodograph-residual", rmax, tol);
  const OmegaTable om = omega_table(c.sol, c.cal, max_level(h) + 1);
  const double lt = log_tau_genus0(c.sol, om, h, *v);
  if (!tsv) {
    std::ostringstream pt;
    pt << "# v = (";
    for (size_t i = 0; i < v->size(); ++i)
      pt << (i ? ", " : "") << Report::format_double((*v)[i]);
    pt << ")   log tau = " << Report::format_double(lt);
    rep.command += "\n" + pt.str();
  } else {
    rep.add("log-tau", "numeric", Report::format_double(lt), "-", true);
    for (size_t i = 0; i < v->size(); ++i)
      rep.add("v" + std::to_string(i + 1), "numeric",
              Report::format_double((*v)[i]), "-", true);
  }
  return rep.finish();
}

int cmd_legendre_check(const std::string& path, const std::string& hat_path,
                       int P, const std::vector<std::string>& shifts,
                       const std::vector<std::string>& times,
                       const std::string& guess_text, double tol, bool tsv) {
  Report rep;
  rep.tsv = tsv;
  rep.command = "wdvv legendre-check " + path +
                (hat_path.empty() ? "" : " " + hat_path);
  const HodographSetup h = setup_from_flags(shifts, times);
  const int L = std::max(2 * P, max_level(h) + 2);
  const Calibrated c = load_calibrated(path, L);
  if (c.cal.levels() < L)
    throw std::runtime_error(path + ": calibration too shallow (need level " +
                             std::to_string(L) + ")");
  const auto v =
      hodograph_solve(c.sol, c.cal, h, guess_from_flags(guess_text, h, c.file.n));
  if (!v) {
    rep.add("hodograph-newton", "numeric", "no convergence",
            Report::format_double(tol), false);
    return rep.finish();
  }
  rep.add_numeric("transformed-times-solve-hatted-system",
                  check_prop51(c.sol, c.cal, h, *v), std::max(tol, 1e-9));
  double two_sided;
  if (hat_path.empty()) {
    two_sided = check_legendre_two_sided(c.sol, c.cal, h, *v, P);
  } else {
    const Calibrated chat = load_calibrated(hat_path, 2 * P - 1);
    const FrobeniusSolution shat = invert_solution(c.sol);
    if (chat.sol.F() != shat.F())
      throw std::runtime_error(hat_path +
                               ": potential is not the inverse of " + path);
    two_sided = check_legendre_two_sided(c.sol, c.cal, chat.cal, h, *v, P);
  }
  rep.add_numeric("log-tau-two-sided", two_sided, tol);
  return rep.finish();
}

int cmd_virasoro(const std::string& path, int m, int P,
                 const std::vector<std::string>& shifts,
                 const std::vector<std::string>& times,
                 const std::string& guess_text, bool hat, double tol, bool tsv) {
  Report rep;
  rep.tsv = tsv;
  rep.command = "wdvv virasoro " + path + " -m " + std::to_string(m) +
                (hat ? " --hat" : "");
  const HodographSetup h = setup_from_flags(shifts, times);
  // the hatted side costs two extra levels: one in the time transform, one in
  // the calibration transform
  const int L =
      std::max(2 * std::max(max_level(h) + 1, P) - 1, max_level(h) + 2) +
      (hat ? 2 : 0);
  const Calibrated c = load_calibrated(path, L);
  const auto v0 =
      hodograph_solve(c.sol, c.cal, h, guess_from_flags(guess_text, h, c.file.n));
  if (!v0) {
    rep.add("hodograph-newton", "numeric", "no convergence",
            Report::format_double(tol), false);
    return rep.finish();
  }

  FrobeniusSolution s = c.sol;
  Calibration cal = c.cal;
  HodographSetup hs = h;
  std::vector<double> v = *v0;
  if (hat) {
    // move everything to the hatted side
    const double hx = hat_x_of(c.sol, c.cal, h, *v0);
    hs = transform_times(c.sol, h, hx, max_level(h) + 1);
    cal = transform_calibration(c.sol, c.cal);
    const auto fw = inversion_forward(c.sol);
    std::vector<double> vh;
    std::map<std::string, double> at;
    for (int a = 1; a <= c.file.n; ++a) at[c.sol.var(a)] = (*v0)[a - 1];
    for (int a = 1; a <= c.file.n; ++a)
      vh.push_back(fw.at(c.sol.var(a)).evaluate(at));
    s = invert_solution(c.sol);
    v = vh;
  }
  const int table = std::max(max_level(hs) + 1, P);
  if (cal.levels() < 2 * table - 1)
    throw std::runtime_error("calibration too shallow for the Omega table");
  const OmegaTable om = omega_table(s, cal, table);
  const VirasoroOperator L_op = virasoro_operator(s, cal, m, table - 1);
  rep.add_numeric("virasoro-residual", std::fabs(virasoro_residual(s, om, hs, L_op, v)),
                  tol);
  return rep.finish();
}

int cmd_genus(const std::string& path, const std::string& op,
              const std::string& g_path, const std::string& f2_path, bool tsv) {
  Report rep;
  rep.tsv = tsv;
  rep.command = "wdvv genus " + path + " --op " + op;
  const SolutionFile f = load_solution(path);
  if (!f.conformal())
    throw std::runtime_error(path + ": genus checks need conformal data (d, mu)");
  const FrobeniusSolution s = f.solution();
  const JetExpr G = g_path.empty() ? JetExpr() : load_expression(g_path);

  if (op == "det-identity") {
    std::string why;
    rep.add_symbolic("det-identity", check_det_identity(s, &why), why);
  } else if (op == "genus1") {
    std::string why;
    rep.add_symbolic("genus1-transform", check_genus1_transform(s, G, &why), why);
  } else if (op == "expand") {
    JetExpr F2;
    if (!f2_path.empty()) {
      for (const auto& [name, e] : load_named_expressions(f2_path))
        if (name == "F2") F2 = e;
    }
    const JetExpr F1 = genus1_potential(s, G);
    const RationalFunction vn = RationalFunction::variable(s.var(s.n()));
    const GenusSeries tilde = legendre_expand({{F1, F2}}, vn);
    const RationalFunction A1 = total_x_derivative(F1).rational();
    const JetExpr expected = F2 - JetExpr(A1 * A1 / (Scalar(2) * vn));
    rep.add_symbolic("expand-genus1-fixed", tilde.F(1) == F1);
    rep.add_symbolic("expand-genus2-closed-form", tilde.F(2) == expected);
    if (!tsv) {
      rep.command += "\n# Ftilde2 = " + tilde.F(2).str();
    }
  } else if (op == "check-g2") {
    if (f2_path.empty()) usage_error("--op check-g2 needs --F2 <file>");
    JetExpr F2, F2hat;
    bool have_f2 = false, have_f2hat = false;
    for (const auto& [name, e] : load_named_expressions(f2_path)) {
      if (name == "F2") F2 = e, have_f2 = true;
      if (name == "F2hat") F2hat = e, have_f2hat = true;
    }
    if (!have_f2 || !have_f2hat)
      throw std::runtime_error(f2_path + ": need both F2 = ... and F2hat = ...");
    const JetExpr resid = check_genus2(s, G, F2, F2hat);
    rep.add_symbolic("genus2-correction-form", resid.is_zero(),
                     resid.is_zero() ? "" : "residual nonzero");
  } else {
    usage_error("unknown --op '" + op + "'");
  }
  return rep.finish();
}

int cmd_verify_all(const std::string& path, int P_flag,
                   const std::string& g_path, bool tsv) {
  Report rep;
  rep.tsv = tsv;
  rep.command = "wdvv verify-all " + path;
  const SolutionFile f = load_solution(path);
  if (!f.conformal())
    throw std::runtime_error(path + ": verify-all needs conformal data (d, mu)");
  const FrobeniusSolution s = f.solution();
  const int n = s.n();
  std::string why;

  // --- solution level -----------------------------------------------------
  rep.add_symbolic("wdvv-associativity", check_wdvv(s, &why), why);
  rep.add_symbolic("quasi-homogeneity", check_quasihomogeneity(s, &why), why);

  const FrobeniusSolution shat = invert_solution(s);
  rep.add_symbolic("inverse-wdvv", check_wdvv(shat, &why), why);
  try {
    const Spectrum got = infer_spectrum(n, shat.F());
    const bool d_ok = got.d == Scalar(2) - s.d();
    const bool mu_ok = got.mu == shat.mu();
    rep.add_symbolic("inverse-spectrum", d_ok && mu_ok);
  } catch (const std::exception& e) {
    rep.skip("inverse-spectrum", std::string("not inferable: ") + e.what());
  }
  rep.add_symbolic("double-inversion",
                   same_up_to_quadratic(invert_solution(shat), s));
  rep.add_symbolic("hessian-identity", check_hessian_identity(s, &why), why);
  rep.add_symbolic("metric-covariance", check_metric_covariance(s, &why), why);

  // --- calibration level ----------------------------------------------------
  // levels 2P+1: the two-sided tau comparison at depth P needs 2P, plus one
  // for the level shift in the calibration transform
  const int P = P_flag > 0 ? P_flag : (n == 2 ? 4 : 3);
  const int L = 2 * P + 1;
  const Calibration cal = build_calibration(s, L);
  rep.add_symbolic("calibration-axioms", check_calibration(s, cal, &why), why);
  const Calibration calhat = transform_calibration(s, cal);
  rep.add_symbolic("calibration-transform", check_calibration(shat, calhat, &why),
                   why);
  const OmegaTable om = omega_table(s, cal, P);
  rep.add_symbolic("omega-consistency", check_omega(s, cal, om, &why), why);
  rep.add_symbolic("omega-transform", check_omega_transform(s, cal, P - 1, &why),
                   why);
  {
    bool flows_ok = true;
    std::string flow_why;
    for (int alpha = 1; alpha <= n && flows_ok; ++alpha)
      for (int p = 0; p <= 1 && flows_ok; ++p)
        if (!check_flow_correspondence(s, cal, alpha, p, &why)) {
          flows_ok = false;
          flow_why = "flow (" + std::to_string(alpha) + "," + std::to_string(p) +
                     "): " + why;
        }
    rep.add_symbolic("flow-correspondence", flows_ok, flow_why);
  }

  // --- hodograph / tau level ------------------------------------------------
  const HodographSetup h0 = default_setup(n);
  std::vector<double> g0(n);
  for (int a = 1; a <= n; ++a) g0[a - 1] = h0.times.at({a, 0});
  const auto v0 = hodograph_solve(s, cal, h0, g0);
  if (!v0) {
    rep.add("hodograph-trivial", "numeric", "no convergence", "1e-14", false);
    return rep.finish();
  }
  double triv = 0;
  for (int a = 1; a <= n; ++a)
    triv = std::max(triv, std::fabs((*v0)[a - 1] - h0.times.at({a, 0})));
  rep.add_numeric("hodograph-trivial-solution", triv, 1e-14);

  const double dev1 = check_tau_def(s, cal, om, h0, *v0, 1e-3, std::min(P, 2));
  rep.add_numeric("tau-second-derivatives", dev1, 1e-6);
  const double dev2 = check_tau_def(s, cal, om, h0, *v0, 5e-4, std::min(P, 2));
  const bool richardson_ok = dev2 <= 1e-12 || dev1 / dev2 >= 3.5;
  rep.add("tau-fd-richardson-ratio", "numeric",
          dev2 <= 1e-12 ? "quadratic floor" : Report::format_double(dev1 / dev2),
          ">= 3.5", richardson_ok);

  // three distinct time configurations for the transformation laws
  std::vector<HodographSetup> configs;
  configs.push_back(h0);
  {
    HodographSetup h1 = h0;
    h1.times[{1, 0}] = 0.25;
    h1.times[{n, 0}] = -0.2;
    h1.times[{1, 1}] = 0.05;  // genuine level-1 dependence
    configs.push_back(h1);
    HodographSetup h2 = h0;
    h2.times[{n, 1}] = 0.04;
    h2.times[{n, 0}] = 0.12;
    configs.push_back(h2);
  }
  for (size_t k = 0; k < configs.size(); ++k) {
    const auto& hk = configs[k];
    std::vector<double> gk(n, 0.1);
    for (int a = 1; a <= n; ++a) gk[a - 1] = hk.times.count({a, 0})
                                                 ? hk.times.at({a, 0})
                                                 : 0.1;
    const auto vk = hodograph_solve(s, cal, hk, gk);
    const std::string tag = "config" + std::to_string(k + 1);
    if (!vk || std::fabs((*vk)[n - 1]) < 0.05) {
      rep.add(tag + "-point", "numeric", !vk ? "no convergence" : "|v^n| < 0.05",
              "-", false);
      continue;
    }
    rep.add_numeric("transformed-times-" + tag, check_prop51(s, cal, hk, *vk),
                    1e-9);
    rep.add_numeric("legendre-two-sided-" + tag,
                    check_legendre_two_sided(s, cal, hk, *vk, P), 1e-8);
  }

  // --- Virasoro level ---------------------------------------------------
  rep.add_symbolic("virasoro-commutator",
                   check_virasoro_commutator(s, cal, std::min(P - 1, 2), &why),
                   why);
  {
    const VirasoroOperator Lm1 = virasoro_operator(s, cal, -1, P - 1);
    const VirasoroOperator L0 = virasoro_operator(s, cal, 0, P - 1);
    rep.add_numeric("virasoro-m-1",
                    std::fabs(virasoro_residual(s, om, h0, Lm1, *v0)), 1e-9);
    rep.add_numeric("virasoro-m0",
                    std::fabs(virasoro_residual(s, om, h0, L0, *v0)), 1e-9);
    // hatted side
    const double hx = hat_x_of(s, cal, h0, *v0);
    const HodographSetup hhat = transform_times(s, h0, hx, max_level(h0) + 1);
    const auto fw = inversion_forward(s);
    std::map<std::string, double> at;
    for (int a = 1; a <= n; ++a) at[s.var(a)] = (*v0)[a - 1];
    std::vector<double> vhat;
    for (int a = 1; a <= n; ++a) vhat.push_back(fw.at(s.var(a)).evaluate(at));
    const int table = std::min(P, max_level(hhat) + 1);
    const OmegaTable omhat = omega_table(shat, calhat, table);
    const VirasoroOperator Lm1h = virasoro_operator(shat, calhat, -1, table - 1);
    const VirasoroOperator L0h = virasoro_operator(shat, calhat, 0, table - 1);
    rep.add_numeric("virasoro-m-1-hat",
                    std::fabs(virasoro_residual(shat, omhat, hhat, Lm1h, vhat)),
                    1e-9);
    rep.add_numeric("virasoro-m0-hat",
                    std::fabs(virasoro_residual(shat, omhat, hhat, L0h, vhat)),
                    1e-9);
    // negative control: tampering with one Omega entry must show up
    OmegaTable bad = om;
    bad.at(1, 0, 1, 0) += RationalFunction(Scalar(1));
    const double ctrl =
        std::fabs(virasoro_residual(s, bad, h0, Lm1, *v0) -
                  virasoro_residual(s, om, h0, Lm1, *v0));
    rep.add("virasoro-negative-control", "numeric", Report::format_double(ctrl),
            ">= 1e-3", ctrl >= 1e-3);
  }

  // --- genus level ---------------------------------------------------------
  rep.add_symbolic("det-identity", check_det_identity(s, &why), why);
  const JetExpr G = g_path.empty() ? JetExpr() : load_expression(g_path);
  rep.add_symbolic("genus1-transform", check_genus1_transform(s, G, &why), why);
  {
    const JetExpr F1 = genus1_potential(s, G);
    const RationalFunction vn = RationalFunction::variable(s.var(n));
    const GenusSeries tilde = legendre_expand({{F1, JetExpr()}}, vn);
    const RationalFunction A1 = total_x_derivative(F1).rational();
    const JetExpr expected = JetExpr() - JetExpr(A1 * A1 / (Scalar(2) * vn));
    rep.add_symbolic("expand-genus2-closed-form", tilde.F(2) == expected);
    rep.add_symbolic("genus2-correction-at-constant",
                     genus2_correction(RationalFunction(Scalar(7)),
                                       RationalFunction(Scalar(1)))
                         .is_zero());
  }
  return rep.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computer algebra for WDVV solutions: inversion symmetry, "
      "calibrations, tau functions, and the transformation laws that tie "
      "them together."};
  app.require_subcommand(1);

  std::string path, hat_path, out_path, guess, op, g_path, f2_path, format;
  std::vector<std::string> shifts, times;
  int P = 0, m = -1;
  double tol_hodo = 1e-10, tol_leg = 1e-8, tol_vir = 1e-9;

  auto add_format = [&format](CLI::App* c) {
    c->add_option("--format", format, "Report format: text (default) or tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
  };

  auto* c_check = app.add_subcommand("check", "WDVV + quasi-homogeneity checks");
  c_check->add_option("solution", path, "solution file")->required();
  add_format(c_check);

  auto* c_invert = app.add_subcommand("invert", "apply the inversion symmetry");
  c_invert->add_option("solution", path, "solution file")->required();
  c_invert->add_option("-o,--output", out_path, "output solution file")
      ->required();
  add_format(c_invert);

  auto* c_cal = app.add_subcommand("calibrate", "build and check a calibration");
  c_cal->add_option("solution", path, "solution file")->required();
  c_cal->add_option("-P,--levels", P, "calibration depth")->default_val(4);
  c_cal->add_option("-o,--output", out_path, "write the calibration file");
  add_format(c_cal);

  auto* c_hodo = app.add_subcommand(
      "hodograph", "solve the hodograph system and evaluate log tau");
  c_hodo->add_option("calibration", path, "calibration or solution file")
      ->required();
  c_hodo->add_option("--shift", shifts, "constant shift, a,p=rational");
  c_hodo->add_option("--time", times, "time value, a,p=number");
  c_hodo->add_option("--guess", guess, "Newton starting point x1,...,xn");
  c_hodo->add_option("-P,--levels", P, "calibration depth when building")
      ->default_val(0);
  c_hodo->add_option("--tol", tol_hodo, "residual tolerance (default 1e-10)");
  add_format(c_hodo);

  auto* c_leg = app.add_subcommand(
      "legendre-check", "two-sided tau comparison across the inversion");
  c_leg->add_option("calibration", path, "calibration or solution file")
      ->required();
  c_leg->add_option("calibration-hat", hat_path,
                    "calibration of the inverse solution (optional; derived "
                    "by transformation when omitted)");
  c_leg->add_option("--shift", shifts, "constant shift, a,p=rational");
  c_leg->add_option("--time", times, "time value, a,p=number");
  c_leg->add_option("--guess", guess, "Newton starting point x1,...,xn");
  c_leg->add_option("-P,--levels", P, "hatted Omega-table depth")->default_val(2);
  c_leg->add_option("--tol", tol_leg, "agreement tolerance (default 1e-8)");
  add_format(c_leg);

  auto* c_vir = app.add_subcommand("virasoro", "Virasoro constraint residual");
  c_vir->add_option("calibration", path, "calibration or solution file")
      ->required();
  c_vir->add_option("-m", m, "constraint index: -1 or 0")
      ->required()
      ->check(CLI::IsMember({-1, 0}));
  c_vir->add_option("--shift", shifts, "constant shift, a,p=rational");
  c_vir->add_option("--time", times, "time value, a,p=number");
  c_vir->add_option("--guess", guess, "Newton starting point x1,...,xn");
  c_vir->add_flag("--hat", "check on the inverse (hatted) side");
  c_vir->add_option("-P,--levels", P, "Omega-table depth")->default_val(2);
  c_vir->add_option("--tol", tol_vir, "residual tolerance (default 1e-9)");
  add_format(c_vir);

  auto* c_gen = app.add_subcommand("genus", "genus-expansion identities");
  c_gen->add_option("solution", path, "solution file")->required();
  c_gen->add_option("--op", op,
                    "genus1 | det-identity | expand | check-g2")
      ->required()
      ->check(CLI::IsMember({"genus1", "det-identity", "expand", "check-g2"}));
  c_gen->add_option("--G", g_path, "G-function file (defaults to zero)");
  c_gen->add_option("--F2", f2_path, "genus-two data file (F2 / F2hat entries)");
  add_format(c_gen);

  auto* c_all = app.add_subcommand("verify-all",
                                   "every check in the suite, end to end");
  c_all->add_option("solution", path, "solution file")->required();
  c_all->add_option("-P,--levels", P,
                    "Omega-table depth (default: 4 for n=2, 3 otherwise)")
      ->default_val(0);
  c_all->add_option("--G", g_path, "G-function file (defaults to zero)");
  add_format(c_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const bool tsv = format == "tsv";
  try {
    if (c_check->parsed()) return cmd_check(path, tsv);
    if (c_invert->parsed()) return cmd_invert(path, out_path, tsv);
    if (c_cal->parsed()) return cmd_calibrate(path, P, out_path, tsv);
    if (c_hodo->parsed())
      return cmd_hodograph(path, P, shifts, times, guess, tol_hodo, tsv);
    if (c_leg->parsed())
      return cmd_legendre_check(path, hat_path, P, shifts, times, guess, tol_leg, tsv);
    if (c_vir->parsed())
      return cmd_virasoro(path, m, P, shifts, times, guess,
                          c_vir->count("--hat") > 0, tol_vir, tsv);
    if (c_gen->parsed()) return cmd_genus(path, op, g_path, f2_path, tsv);
    if (c_all->parsed()) return cmd_verify_all(path, P, g_path, tsv);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
