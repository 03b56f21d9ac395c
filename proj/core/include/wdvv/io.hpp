// File formats. Solution files are line oriented with '#' comments:
//   n = <int>
//   F = <expression>
//   d = <rational>              (optional)
//   mu = [<rational>, ...]      (optional; with d, enables conformal checks)
// Expression files (G-functions, genus-two data) hold one expression,
// optionally prefixed by `<name> =`, possibly spanning several lines.
#pragma once

#include "wdvv/frobenius.hpp"
#include "wdvv/jet.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wdvv {

struct SolutionFile {
  int n = 0;
  RationalFunction F;
  std::optional<Scalar> d;
  std::optional<std::vector<Scalar>> mu;

  bool conformal() const { return d.has_value() && mu.has_value(); }
  // Requires conformal(); constructor-validates.
  FrobeniusSolution solution() const;
  // Zero spectrum stand-in for files without (d, mu): supports the WDVV
  // associativity check, which only uses eta and c.
  FrobeniusSolution wdvv_only() const;
};

SolutionFile parse_solution_text(const std::string& text);
std::string solution_to_text(const SolutionFile& s);
SolutionFile load_solution(const std::string& path);
void save_solution(const std::string& path, const SolutionFile& s);

JetExpr parse_expression_text(const std::string& text);
JetExpr load_expression(const std::string& path);

// Files holding several `<name> = <expression>` entries (one per line, '#'
// comments allowed), e.g. genus-two data with F2 and F2hat. Order preserved.
std::vector<std::pair<std::string, JetExpr>> parse_named_expressions(
    const std::string& text);
std::vector<std::pair<std::string, JetExpr>> load_named_expressions(
    const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace wdvv
