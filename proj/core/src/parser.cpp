#include "wdvv/parser.hpp"

#include <cctype>
#include <stdexcept>

namespace wdvv {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  JetExpr parse() {
    JetExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("parse error at position " + std::to_string(pos_) +
                             ": " + msg + " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  JetExpr expr() {
    JetExpr acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  JetExpr term() {
    JetExpr acc = unary();
    for (;;) {
      if (eat('*'))
        acc = acc * unary();
      else if (eat('/'))
        acc = acc / unary();
      else
        return acc;
    }
  }

  JetExpr unary() {
    bool neg = false;
    for (;;) {
      if (eat('-'))
        neg = !neg;
      else if (eat('+'))
        ;
      else
        break;
    }
    JetExpr e = power();
    return neg ? -e : e;
  }

  JetExpr power() {
    JetExpr base = atom();
    if (!eat('^')) return base;
    const long e = exponent();
    if (e == 1) return base;
    if (e == 0) return JetExpr(Scalar(1));
    if (!base.is_rational()) fail("power of a log-bearing expression");
    return JetExpr(base.rational().pow(static_cast<int>(e)));
  }

  long exponent() {
    skip_ws();
    const bool paren = eat('(');
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer exponent");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos_;
    }
    if (paren && !eat(')')) fail("expected ')' after exponent");
    return neg ? -v : v;
  }

  JetExpr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      JetExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
    fail("expected number, variable, or '('");
  }

  JetExpr number() {
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      digits += s_[pos_++];
    if (pos_ < s_.size() && s_[pos_] == '.')
      fail("decimal literals are not supported; use rationals like 1/10");
    return JetExpr(parse_scalar(digits));
  }

  JetExpr ident() {
    std::string name;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      name += s_[pos_++];
    if (name == "log") {
      if (!eat('(')) fail("expected '(' after log");
      JetExpr arg = expr();
      if (!eat(')')) fail("expected ')' after log argument");
      if (!arg.is_rational()) fail("nested log is not supported");
      return JetExpr::log(arg.rational());
    }
    return JetExpr(RationalFunction::variable(name));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

JetExpr parse_jet(const std::string& text) { return Parser(text).parse(); }

RationalFunction parse_rational(const std::string& text) {
  const JetExpr e = parse_jet(text);
  if (!e.is_rational())
    throw std::runtime_error("expected a rational expression (no log) in \"" + text + "\"");
  return e.rational();
}

Polynomial parse_polynomial(const std::string& text) {
  const RationalFunction f = parse_rational(text);
  if (!f.is_polynomial())
    throw std::runtime_error("expected a polynomial expression in \"" + text + "\"");
  return f.as_polynomial();
}

}  // namespace wdvv
