#include "zform/parser.hpp"

#include <cctype>

namespace zform {

namespace {

struct Parser {
  const std::string &src;
  const std::vector<std::string> &coords;
  const std::vector<std::string> &params;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) { ++pos; return true; }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw parse_error(std::string("expected '") + c + "'", pos);
  }

  [[noreturn]] void fail(const std::string &msg) { throw parse_error(msg, pos); }

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos != src.size()) fail("unexpected trailing input");
    return e;
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept('+')) e = e + term();
      else if (accept('-')) e = e - term();
      else return e;
    }
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      if (accept('*')) e = e * factor();
      else if (accept('/')) e = e / factor();
      else return e;
    }
  }

  Expr factor() {
    if (accept('-')) return -factor();
    Expr b = base();
    if (accept('^')) {
      skip_ws();
      bool neg = false;
      if (pos < src.size() && src[pos] == '-') { neg = true; ++pos; }
      size_t start = pos;
      long long v = 0;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        v = v * 10 + (src[pos] - '0');
        ++pos;
      }
      if (pos == start) fail("expected integer exponent");
      return b.pow(static_cast<int>(neg ? -v : v));
    }
    return b;
  }

  Expr base() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of input");
    char c = src[pos];
    if (accept('(')) {
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  Expr number() {
    size_t start = pos;
    Rational value(0);
    bool any = false;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      value = value * 10 + (src[pos] - '0');
      ++pos;
      any = true;
    }
    if (pos < src.size() && src[pos] == '.') {
      ++pos;
      Rational scale(1, 10);
      bool frac = false;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        value += scale * (src[pos] - '0');
        scale /= 10;
        ++pos;
        frac = true;
      }
      if (!frac && !any) { pos = start; fail("malformed number"); }
    }
    if (!any && pos == start) fail("malformed number");
    return Expr::number(value);
  }

  Expr identifier() {
    size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    std::string name = src.substr(start, pos - start);
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] == name) return Expr::coord(static_cast<int>(i));
    for (const auto &p : params)
      if (p == name) return Expr::param(name);
    static const std::pair<const char *, Expr::Fn> fns[] = {
        {"sin", Expr::Fn::Sin}, {"cos", Expr::Fn::Cos}, {"tan", Expr::Fn::Tan},
        {"exp", Expr::Fn::Exp}, {"ln", Expr::Fn::Ln},   {"sqrt", Expr::Fn::Sqrt}};
    for (const auto &[fname, f] : fns) {
      if (name == fname) {
        if (!accept('(')) { pos = start; fail("function '" + name + "' requires an argument"); }
        Expr arg = expr();
        expect(')');
        return Expr::func(f, arg);
      }
    }
    pos = start;
    fail("unknown identifier '" + name + "'");
  }
};

} // namespace

Expr parse_expr(const std::string &source, const std::vector<std::string> &coords,
                const std::vector<std::string> &params) {
  Parser p{source, coords, params};
  return p.parse();
}

} // namespace zform
