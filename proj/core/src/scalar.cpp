#include "wdvv/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace wdvv {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Scalar> try_parse_scalar(const std::string& text) {
  std::string s = text;
  // strip surrounding whitespace
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return std::nullopt;
  const auto last = s.find_last_not_of(" \t");
  s = s.substr(first, last - first + 1);

  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  const auto slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  BigInt n(num), d(den);
  if (d == 0) return std::nullopt;
  Scalar r(n, d);
  return negative ? Scalar(-r) : r;
}

Scalar parse_scalar(const std::string& text) {
  auto r = try_parse_scalar(text);
  if (!r) throw std::invalid_argument("not an exact rational: '" + text + "'");
  return *r;
}

std::string scalar_to_string(const Scalar& s) {
  return s.str();
}

double scalar_to_double(const Scalar& s) {
  return s.convert_to<double>();
}

Scalar scalar_pow(const Scalar& s, long e) {
  if (e == 0) return Scalar(1);
  if (s == 0 && e < 0) throw std::domain_error("0 raised to a negative power");
  Scalar base = e < 0 ? Scalar(1) / s : s;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Scalar out(1);
  while (k) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

Scalar scalar_gcd(const Scalar& a, const Scalar& b) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  if (a == 0) return b < 0 ? Scalar(-b) : b;
  if (b == 0) return a < 0 ? Scalar(-a) : a;
  BigInt n = gcd(BigInt(numerator(a)), BigInt(numerator(b)));
  BigInt d = lcm(BigInt(denominator(a)), BigInt(denominator(b)));
  return Scalar(n, d);
}

}  // namespace wdvv
