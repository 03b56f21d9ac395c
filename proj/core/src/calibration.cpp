#include "wdvv/calibration.hpp"

#include "wdvv/jet.hpp"
#include "wdvv/linalg.hpp"
#include "wdvv/parser.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wdvv {

namespace {

// <grad f, grad g> = d_m f eta^{m,nu} d_nu g  (eta is antidiagonal)
RationalFunction eta_pairing(const FrobeniusSolution& s, const RationalFunction& f,
                             const RationalFunction& g) {
  RationalFunction acc;
  for (int m = 1; m <= s.n(); ++m) {
    const int w = s.n() + 1 - m;
    acc += f.derivative(s.var(m)) * RationalFunction(s.eta_inv(m, w)) *
           g.derivative(s.var(w));
  }
  return acc;
}

RationalFunction theta_level0(const FrobeniusSolution& s, int alpha) {
  RationalFunction acc;
  for (int nu = 1; nu <= s.n(); ++nu) {
    if (s.eta(alpha, nu) == 0) continue;
    acc += RationalFunction(s.eta(alpha, nu)) * RationalFunction::variable(s.var(nu));
  }
  return acc;
}

// Particular solution of Hessian(theta) = H by double radial integration:
// a monomial c v^I in H_{bg} contributes c v^{I+e_b+e_g} / ((|I|+1)(|I|+2)).
Polynomial homotopy_integrate(const FrobeniusSolution& s, const Mat<RationalFunction>& H) {
  Polynomial acc;
  for (int b = 1; b <= s.n(); ++b)
    for (int g = 1; g <= s.n(); ++g) {
      const RationalFunction& h = H[b - 1][g - 1];
      if (h.is_zero()) continue;
      if (!h.is_polynomial())
        throw std::runtime_error(
            "calibration construction needs polynomial structure data");
      const Polynomial hp = h.as_polynomial();
      for (const auto& [e, c] : hp.terms()) {
        int total = 0;
        for (int k : e) total += k;
        const Scalar denom = Scalar((total + 1)) * Scalar((total + 2));
        acc += Polynomial::monomial(c / denom, hp.vars(), e) *
               Polynomial::variable(s.var(b)) * Polynomial::variable(s.var(g));
      }
    }
  return acc;
}

// exponent expansion over the full variable list v1..vn
std::map<std::vector<int>, Scalar> full_exps(const Polynomial& p, int n) {
  std::map<std::vector<int>, Scalar> out;
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> full(n, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto jv = parse_jet_var(p.vars()[i]);
      if (!jv || jv->order != 0 || jv->alpha < 1 || jv->alpha > n)
        throw std::runtime_error("unexpected variable " + p.vars()[i] +
                                 " in calibration stage");
      full[jv->alpha - 1] = e[i];
    }
    out[full] += c;
  }
  return out;
}

Scalar lambda_of(const FrobeniusSolution& s, int alpha, int p) {
  return Scalar(p) + 1 + s.mu_at(1) + s.mu_at(alpha);
}

}  // namespace

const RationalFunction& OmegaTable::at(int alpha, int p, int beta, int q) const {
  return entries[static_cast<std::size_t>(
      (((alpha - 1) * P + p) * n + (beta - 1)) * P + q)];
}

RationalFunction& OmegaTable::at(int alpha, int p, int beta, int q) {
  return entries[static_cast<std::size_t>(
      (((alpha - 1) * P + p) * n + (beta - 1)) * P + q)];
}

Calibration build_calibration(const FrobeniusSolution& s, int P) {
  if (P < 0) throw std::invalid_argument("build_calibration: negative level");
  const int n = s.n();
  Calibration cal;
  cal.n = n;
  cal.theta.assign(n, {});
  for (int alpha = 1; alpha <= n; ++alpha)
    cal.theta[alpha - 1].push_back(theta_level0(s, alpha));
  cal.R.assign(P, Mat<Scalar>(n, std::vector<Scalar>(n, Scalar(0))));

  for (int p = 1; p <= P; ++p) {
    for (int alpha = 1; alpha <= n; ++alpha) {
      const RationalFunction& prev = cal.th(alpha, p - 1);

      Mat<RationalFunction> H(n, std::vector<RationalFunction>(n));
      for (int b = 1; b <= n; ++b)
        for (int g = b; g <= n; ++g) {
          RationalFunction h;
          for (int l = 1; l <= n; ++l)
            h += s.c_upper(l, b, g) * prev.derivative(s.var(l));
          H[b - 1][g - 1] = h;
          H[g - 1][b - 1] = h;
        }
      const Polynomial theta0 = homotopy_integrate(s, H);

      // pin the v^1 coefficient: d_1 theta = theta_{p-1}
      RationalFunction gap = prev - RationalFunction(theta0.derivative(s.var(1)));
      if (!gap.is_constant())
        throw std::runtime_error("internal: homotopy misses non-affine data at level " +
                                 std::to_string(p));
      const Scalar a1 = gap.constant_value();

      const Scalar lam = lambda_of(s, alpha, p);
      Polynomial base = theta0 + Polynomial::variable(s.var(1)) * Polynomial(a1);

      // residual B + sum_u x_u C_u = 0 over unknowns
      // x = (a_2..a_n, a_0 when lam != 0, resonant (R_p)^g_alpha)
      Polynomial B = s.euler(RationalFunction(base)).as_polynomial() - base * lam;
      for (int k = 1; k < p; ++k)
        for (int g = 1; g <= n; ++g) {
          const Scalar r = cal.R_entry(k, g, alpha);
          if (r != 0) B -= cal.th(g, p - k).as_polynomial() * r;
        }

      std::vector<Polynomial> cols;
      std::vector<std::pair<char, int>> what;  // ('a', g) or ('R', gamma)
      for (int g = 2; g <= n; ++g) {
        cols.push_back(Polynomial::variable(s.var(g)) * Polynomial(s.degree(g) - lam));
        what.emplace_back('a', g);
      }
      if (lam != 0) {
        cols.push_back(Polynomial(-lam));
        what.emplace_back('a', 0);
      }
      for (int g = 1; g <= n; ++g) {
        if (s.mu_at(g) - s.mu_at(alpha) != Scalar(p)) continue;
        cols.push_back(-theta_level0(s, g).as_polynomial());
        what.emplace_back('R', g);
      }

      // assemble monomial-matching rows
      std::map<std::vector<int>, Scalar> bmap = full_exps(B, n);
      std::vector<std::map<std::vector<int>, Scalar>> cmaps;
      for (const auto& cPoly : cols) cmaps.push_back(full_exps(cPoly, n));
      std::map<std::vector<int>, std::size_t> rows;
      for (const auto& [e, c] : bmap) rows.emplace(e, rows.size());
      for (const auto& m : cmaps)
        for (const auto& [e, c] : m) rows.emplace(e, rows.size());

      Mat<Scalar> A(rows.size(), std::vector<Scalar>(cols.size(), Scalar(0)));
      std::vector<Scalar> rhs(rows.size(), Scalar(0));
      for (const auto& [e, idx] : rows) {
        for (std::size_t u = 0; u < cmaps.size(); ++u) {
          const auto it = cmaps[u].find(e);
          if (it != cmaps[u].end()) A[idx][u] = it->second;
        }
        const auto itb = bmap.find(e);
        if (itb != bmap.end()) rhs[idx] = -itb->second;
      }
      const auto x = solve_exact(A, rhs);
      if (!x)
        throw std::runtime_error("calibration stage " + std::to_string(p) +
                                 " is inconsistent for alpha=" + std::to_string(alpha));

      Polynomial theta = base;
      for (std::size_t u = 0; u < what.size(); ++u) {
        const auto& [kind, g] = what[u];
        if (kind == 'a')
          theta += (g == 0 ? Polynomial(Scalar(1)) : Polynomial::variable(s.var(g))) *
                   Polynomial((*x)[u]);
        else
          cal.R[p - 1][g - 1][alpha - 1] = (*x)[u];
      }
      cal.theta[alpha - 1].push_back(RationalFunction(theta));
    }
  }

  while (!cal.R.empty()) {
    bool zero = true;
    for (const auto& row : cal.R.back())
      for (const auto& v : row)
        if (v != 0) zero = false;
    if (!zero) break;
    cal.R.pop_back();
  }
  return cal;
}

bool check_calibration(const FrobeniusSolution& s, const Calibration& cal,
                       std::string* why) {
  const auto fail = [why](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = s.n();
  if (cal.n != n) return fail("calibration field count mismatch");
  if (cal.levels() < 0) return fail("empty calibration");
  for (const auto& tower : cal.theta)
    if (static_cast<int>(tower.size()) != cal.levels() + 1)
      return fail("ragged calibration levels");

  const int P = cal.levels();
  for (int alpha = 1; alpha <= n; ++alpha)
    if (cal.th(alpha, 0) != theta_level0(s, alpha))
      return fail("level-0 density is not eta_{alpha,nu} v^nu at alpha=" +
                  std::to_string(alpha));

  // recursion d_b d_g theta_p = c^l_{bg} d_l theta_{p-1}
  for (int p = 1; p <= P; ++p)
    for (int alpha = 1; alpha <= n; ++alpha)
      for (int b = 1; b <= n; ++b)
        for (int g = b; g <= n; ++g) {
          RationalFunction rhs;
          for (int l = 1; l <= n; ++l)
            rhs += s.c_upper(l, b, g) * cal.th(alpha, p - 1).derivative(s.var(l));
          if (cal.th(alpha, p).derivative(s.var(b)).derivative(s.var(g)) != rhs)
            return fail("recursion fails at alpha=" + std::to_string(alpha) +
                        " p=" + std::to_string(p) + " (b,g)=(" + std::to_string(b) +
                        "," + std::to_string(g) + ")");
        }

  // d_1 normalization
  for (int p = 1; p <= P; ++p)
    for (int alpha = 1; alpha <= n; ++alpha)
      if (cal.th(alpha, p).derivative(s.var(1)) != cal.th(alpha, p - 1))
        return fail("d_1 normalization fails at alpha=" + std::to_string(alpha) +
                    " p=" + std::to_string(p));

  // E-condition
  for (int p = 0; p <= P; ++p)
    for (int alpha = 1; alpha <= n; ++alpha) {
      RationalFunction rhs = RationalFunction(lambda_of(s, alpha, p)) * cal.th(alpha, p);
      for (int k = 1; k <= p; ++k)
        for (int g = 1; g <= n; ++g) {
          const Scalar r = cal.R_entry(k, g, alpha);
          if (r != 0) rhs += RationalFunction(r) * cal.th(g, p - k);
        }
      if (s.euler(cal.th(alpha, p)) != rhs)
        return fail("Euler condition fails at alpha=" + std::to_string(alpha) +
                    " p=" + std::to_string(p));
    }

  // R support and eta-adjoint symmetry
  for (int k = 1; k <= static_cast<int>(cal.R.size()); ++k)
    for (int g = 1; g <= n; ++g)
      for (int alpha = 1; alpha <= n; ++alpha) {
        if (cal.R_entry(k, g, alpha) != 0 && s.mu_at(g) - s.mu_at(alpha) != Scalar(k))
          return fail("R_" + std::to_string(k) + " entry off the resonance lattice");
      }
  for (int k = 1; k <= static_cast<int>(cal.R.size()); ++k)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        Scalar lhs(0), rhs(0);
        for (int nu = 1; nu <= n; ++nu) {
          lhs += s.eta(a, nu) * cal.R_entry(k, nu, b);
          rhs += s.eta(b, nu) * cal.R_entry(k, nu, a);
        }
        if (lhs != ((k % 2 == 0) ? -rhs : rhs))
          return fail("R_" + std::to_string(k) + " breaks the eta-adjoint symmetry");
      }

  // orthonormality
  for (int sum = 0; sum <= P; ++sum)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        RationalFunction acc;
        for (int k = 0; k <= sum; ++k) {
          const int l = sum - k;
          RationalFunction t = eta_pairing(s, cal.th(a, k), cal.th(b, l));
          acc += (l % 2 == 0) ? t : -t;
        }
        const RationalFunction expect =
            (sum == 0) ? RationalFunction(s.eta(a, b)) : RationalFunction();
        if (acc != expect)
          return fail("orthonormality fails at s=" + std::to_string(sum) + " (" +
                      std::to_string(a) + "," + std::to_string(b) + ")");
      }

  return true;
}

OmegaTable omega_table(const FrobeniusSolution& s, const Calibration& cal, int P) {
  if (P < 1) throw std::invalid_argument("omega_table: need P >= 1");
  if (cal.levels() < 2 * P - 1)
    throw std::invalid_argument("omega_table: calibration too shallow (need level " +
                                std::to_string(2 * P - 1) + ")");
  const int n = s.n();
  // triangular scratch: for fixed q, p ranges up to 2P-2-q
  auto key = [n](int alpha, int p, int beta, int q) {
    return std::to_string(alpha) + "," + std::to_string(p) + "," +
           std::to_string(beta) + "," + std::to_string(q);
  };
  std::map<std::string, RationalFunction> scratch;
  for (int q = 0; q <= P - 1; ++q)
    for (int p = 0; p <= 2 * P - 2 - q; ++p)
      for (int alpha = 1; alpha <= n; ++alpha)
        for (int beta = 1; beta <= n; ++beta) {
          RationalFunction val;
          if (q == 0) {
            val = cal.th(alpha, p + 1).derivative(s.var(beta));
          } else {
            val = eta_pairing(s, cal.th(alpha, p + 1), cal.th(beta, q)) -
                  scratch.at(key(alpha, p + 1, beta, q - 1));
          }
          scratch.emplace(key(alpha, p, beta, q), std::move(val));
        }

  OmegaTable t;
  t.n = n;
  t.P = P;
  t.entries.assign(static_cast<std::size_t>(n) * P * n * P, RationalFunction());
  for (int alpha = 1; alpha <= n; ++alpha)
    for (int p = 0; p < P; ++p)
      for (int beta = 1; beta <= n; ++beta)
        for (int q = 0; q < P; ++q)
          t.at(alpha, p, beta, q) = scratch.at(key(alpha, p, beta, q));
  return t;
}

OmegaTable omega_table(const FrobeniusSolution& s, int P) {
  return omega_table(s, build_calibration(s, 2 * P - 1), P);
}

bool check_omega(const FrobeniusSolution& s, const Calibration& cal,
                 const OmegaTable& om, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  auto entry = [](int alpha, int p, int beta, int q) {
    return "Omega_{" + std::to_string(alpha) + "," + std::to_string(p) + ";" +
           std::to_string(beta) + "," + std::to_string(q) + "}";
  };
  const int n = s.n();
  for (int alpha = 1; alpha <= n; ++alpha)
    for (int p = 0; p < om.P; ++p)
      for (int beta = 1; beta <= n; ++beta)
        for (int q = 0; q < om.P; ++q) {
          const RationalFunction& o = om.at(alpha, p, beta, q);
          if (o != om.at(beta, q, alpha, p))
            return fail("symmetry fails for " + entry(alpha, p, beta, q));
          for (int xi = 1; xi <= n; ++xi) {
            RationalFunction rhs;
            for (int sigma = 1; sigma <= n; ++sigma)
              for (int lambda = 1; lambda <= n; ++lambda) {
                RationalFunction csl;
                for (int gamma = 1; gamma <= n; ++gamma)
                  csl += RationalFunction(s.eta_inv(sigma, gamma)) *
                         s.c_upper(lambda, gamma, xi);
                rhs += cal.th(alpha, p).derivative(s.var(sigma)) *
                       cal.th(beta, q).derivative(s.var(lambda)) * csl;
              }
            if (o.derivative(s.var(xi)) != rhs)
              return fail("derivative identity fails for d_" + std::to_string(xi) +
                          " " + entry(alpha, p, beta, q));
          }
          if (alpha == 1 && p == 0 && o != cal.th(beta, q))
            return fail(entry(1, 0, beta, q) + " != theta_{" + std::to_string(beta) +
                        "," + std::to_string(q) + "}");
        }
  if (why) why->clear();
  return true;
}

std::string calibration_to_text(const Calibration& cal) {
  std::ostringstream out;
  out << "n = " << cal.n << "\n";
  for (int alpha = 1; alpha <= cal.n; ++alpha)
    for (int p = 0; p <= cal.levels(); ++p)
      out << "[theta alpha=" << alpha << " p=" << p << "] " << cal.th(alpha, p).str()
          << "\n";
  for (int k = 1; k <= static_cast<int>(cal.R.size()); ++k) {
    bool zero = true;
    for (const auto& row : cal.R[k - 1])
      for (const auto& v : row)
        if (v != 0) zero = false;
    if (zero) continue;
    out << "[R k=" << k << "]";
    for (const auto& row : cal.R[k - 1])
      for (const auto& v : row) out << " " << scalar_to_string(v);
    out << "\n";
  }
  return out.str();
}

Calibration calibration_from_text(const std::string& text) {
  Calibration cal;
  std::map<std::pair<int, int>, RationalFunction> thetas;
  std::map<int, std::vector<Scalar>> rs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto notblank = line.find_first_not_of(" \t\r");
    if (notblank == std::string::npos) continue;
    const auto err = [lineno](const std::string& m) {
      throw std::runtime_error("calibration text line " + std::to_string(lineno) +
                               ": " + m);
    };
    if (line.compare(notblank, 4, "n = ") == 0 || line.compare(notblank, 2, "n=") == 0) {
      const auto eq = line.find('=');
      cal.n = std::stoi(line.substr(eq + 1));
      continue;
    }
    const auto open = line.find('[');
    const auto close = line.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
      err("expected [theta ...] or [R ...] header");
    std::istringstream head(line.substr(open + 1, close - open - 1));
    std::string tag;
    head >> tag;
    const std::string rest = line.substr(close + 1);
    if (tag == "theta") {
      int alpha = -1, p = -1;
      std::string kv;
      while (head >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) err("bad key in theta header");
        const std::string k = kv.substr(0, eq);
        const int v = std::stoi(kv.substr(eq + 1));
        if (k == "alpha")
          alpha = v;
        else if (k == "p")
          p = v;
        else
          err("unknown key " + k);
      }
      if (alpha < 1 || p < 0) err("theta header needs alpha>=1 and p>=0");
      thetas[{alpha, p}] = parse_rational(rest);
    } else if (tag == "R") {
      int k = -1;
      std::string kv;
      while (head >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || kv.substr(0, eq) != "k") err("bad key in R header");
        k = std::stoi(kv.substr(eq + 1));
      }
      if (k < 1) err("R header needs k>=1");
      std::istringstream vals(rest);
      std::string tok;
      std::vector<Scalar> entries;
      while (vals >> tok) entries.push_back(parse_scalar(tok));
      rs[k] = std::move(entries);
    } else {
      err("unknown section " + tag);
    }
  }
  if (cal.n < 2) throw std::runtime_error("calibration text: missing or bad n");
  int P = -1;
  for (const auto& [k, v] : thetas) P = std::max(P, k.second);
  cal.theta.assign(cal.n, std::vector<RationalFunction>(P + 1));
  for (int alpha = 1; alpha <= cal.n; ++alpha)
    for (int p = 0; p <= P; ++p) {
      const auto it = thetas.find({alpha, p});
      if (it == thetas.end())
        throw std::runtime_error("calibration text: missing theta alpha=" +
                                 std::to_string(alpha) + " p=" + std::to_string(p));
      cal.theta[alpha - 1][p] = it->second;
    }
  int maxk = 0;
  for (const auto& [k, v] : rs) maxk = std::max(maxk, k);
  cal.R.assign(maxk, Mat<Scalar>(cal.n, std::vector<Scalar>(cal.n, Scalar(0))));
  for (const auto& [k, v] : rs) {
    if (static_cast<int>(v.size()) != cal.n * cal.n)
      throw std::runtime_error("calibration text: R k=" + std::to_string(k) +
                               " needs " + std::to_string(cal.n * cal.n) + " entries");
    for (int i = 0; i < cal.n; ++i)
      for (int j = 0; j < cal.n; ++j) cal.R[k - 1][i][j] = v[i * cal.n + j];
  }
  return cal;
}

}  // namespace wdvv
