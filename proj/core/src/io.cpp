#include "wdvv/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wdvv/parser.hpp"

namespace wdvv {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string drop_comment(const std::string& line) {
  size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<Scalar> parse_scalar_list(const std::string& text, int lineno) {
  std::string body = strip(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw std::runtime_error("line " + std::to_string(lineno) +
                             ": expected a bracketed list [a, b, ...]");
  body = body.substr(1, body.size() - 2);
  std::vector<Scalar> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    if (item.empty())
      throw std::runtime_error("line " + std::to_string(lineno) + ": empty list entry");
    out.push_back(parse_scalar(item));
  }
  return out;
}

}  // namespace

FrobeniusSolution SolutionFile::solution() const {
  if (!conformal())
    throw std::runtime_error("solution file lacks d/mu (not marked conformal)");
  return FrobeniusSolution(n, F, *d, *mu);
}

FrobeniusSolution SolutionFile::wdvv_only() const {
  return FrobeniusSolution(n, F, Scalar(0), std::vector<Scalar>(n, Scalar(0)));
}

SolutionFile parse_solution_text(const std::string& text) {
  SolutionFile out;
  bool have_n = false, have_F = false;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    line = strip(drop_comment(line));
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected `key = value`");
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    try {
      if (key == "n") {
        Scalar s = parse_scalar(val);
        if (denominator(s) != 1 || s < 2)
          throw std::runtime_error("n must be an integer >= 2");
        out.n = numerator(s).convert_to<int>();
        have_n = true;
      } else if (key == "F") {
        out.F = parse_rational(val);
        have_F = true;
      } else if (key == "d") {
        out.d = parse_scalar(val);
      } else if (key == "mu") {
        out.mu = parse_scalar_list(val, lineno);
      } else {
        throw std::runtime_error("unknown key `" + key + "`");
      }
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_n) throw std::runtime_error("solution file: missing `n = ...`");
  if (!have_F) throw std::runtime_error("solution file: missing `F = ...`");
  if (out.mu && static_cast<int>(out.mu->size()) != out.n)
    throw std::runtime_error("solution file: mu has " +
                             std::to_string(out.mu->size()) + " entries, expected " +
                             std::to_string(out.n));
  if (out.d.has_value() != out.mu.has_value())
    throw std::runtime_error("solution file: d and mu must be given together");
  return out;
}

std::string solution_to_text(const SolutionFile& s) {
  std::string out;
  out += "n = " + std::to_string(s.n) + "\n";
  out += "F = " + s.F.str() + "\n";
  if (s.d) out += "d = " + scalar_to_string(*s.d) + "\n";
  if (s.mu) {
    out += "mu = [";
    for (size_t i = 0; i < s.mu->size(); ++i) {
      if (i) out += ", ";
      out += scalar_to_string((*s.mu)[i]);
    }
    out += "]\n";
  }
  return out;
}

SolutionFile load_solution(const std::string& path) {
  try {
    return parse_solution_text(read_file(path));
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void save_solution(const std::string& path, const SolutionFile& s) {
  write_file(path, solution_to_text(s));
}

JetExpr parse_expression_text(const std::string& text) {
  std::string joined;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = strip(drop_comment(line));
    if (line.empty()) continue;
    if (!joined.empty()) joined += " ";
    joined += line;
  }
  // optional `name =` prefix
  size_t eq = joined.find('=');
  if (eq != std::string::npos) {
    std::string head = strip(joined.substr(0, eq));
    bool ident = !head.empty();
    for (char c : head)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') ident = false;
    if (ident) joined = strip(joined.substr(eq + 1));
  }
  if (joined.empty()) throw std::runtime_error("expression file is empty");
  return parse_jet(joined);
}

std::vector<std::pair<std::string, JetExpr>> parse_named_expressions(
    const std::string& text) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    line = strip(drop_comment(line));
    if (line.empty()) continue;
    size_t eq = line.find('=');
    std::string head = eq == std::string::npos ? "" : strip(line.substr(0, eq));
    bool ident = !head.empty();
    for (char c : head)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') ident = false;
    if (ident) {
      raw.emplace_back(head, strip(line.substr(eq + 1)));
    } else if (raw.empty()) {
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected `<name> = <expression>`");
    } else {
      raw.back().second += " " + line;  // continuation of the previous entry
    }
  }
  std::vector<std::pair<std::string, JetExpr>> out;
  for (const auto& [name, body] : raw) {
    if (body.empty())
      throw std::runtime_error("`" + name + " =` without an expression");
    out.emplace_back(name, parse_jet(body));
  }
  return out;
}

JetExpr load_expression(const std::string& path) {
  try {
    return parse_expression_text(read_file(path));
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::vector<std::pair<std::string, JetExpr>> load_named_expressions(
    const std::string& path) {
  try {
    return parse_named_expressions(read_file(path));
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace wdvv
