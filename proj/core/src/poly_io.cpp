#include "k3fib/poly_io.hpp"

#include <cctype>
#include <optional>

#include "k3fib/errors.hpp"

namespace k3fib {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const PolyGrammar& grammar;

  explicit Parser(std::string_view t, const PolyGrammar& g) : text(t), grammar(g) {}

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::string where = grammar.field.empty() ? "" : grammar.field + ": ";
    throw ParseError(where + message + " at position " + std::to_string(at),
                     at, grammar.field);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  mpz_class natural() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer", start);
    return mpz_class(std::string(text.substr(start, pos - start)));
  }

  std::optional<std::string> ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos == text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
      return std::nullopt;
    std::size_t p = pos;
    while (p < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_'))
      ++p;
    std::string name(text.substr(start, p - start));
    pos = p;
    return name;
  }

  WPoly variable_poly(const std::string& name, std::size_t at) {
    if (name == "t") return WPoly::constant(TPoly::t());
    Var v;
    if (name == "x1") v = Var::x1;
    else if (name == "x2") v = Var::x2;
    else if (name == "x3") v = Var::x3;
    else if (name == "y") v = Var::y;
    else if (name == "z") v = Var::z;
    else fail("unknown variable '" + name + "'", at);
    bool ok = true;
    switch (v) {
      case Var::x1: case Var::x2: case Var::x3: ok = grammar.allow_x; break;
      case Var::y: ok = grammar.allow_y; break;
      case Var::z: ok = grammar.allow_z; break;
    }
    if (!ok) fail("variable '" + name + "' is not allowed here", at);
    return WPoly::variable(v);
  }

  WPoly atom() {
    skip_ws();
    if (pos == text.size()) fail("unexpected end of input", pos);
    char c = text[pos];
    if (c == '(') {
      std::size_t open = pos;
      ++pos;
      WPoly inner = expr();
      if (!consume(')')) fail("unbalanced '('", open);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = natural();
      if (consume('/')) {
        std::size_t dpos = pos;
        mpz_class den = natural();
        if (den == 0) fail("zero denominator", dpos);
        return WPoly::constant(Rational(num, den));
      }
      return WPoly::constant(Rational(num));
    }
    std::size_t at = pos;
    if (auto name = ident()) return variable_poly(*name, at);
    fail(std::string("unexpected character '") + c + "'", pos);
  }

  WPoly factor() {
    WPoly base = atom();
    if (consume('^')) {
      skip_ws();
      std::size_t at = pos;
      mpz_class k = natural();
      if (k < 0 || !k.fits_uint_p() || k > 4096)
        fail("exponent out of range", at);
      return base.pow(k.get_ui());
    }
    return base;
  }

  WPoly term() {
    WPoly acc = factor();
    while (consume('*')) acc *= factor();
    return acc;
  }

  WPoly expr() {
    skip_ws();
    bool neg = consume('-');
    WPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (consume('+')) acc += term();
      else if (consume('-')) acc -= term();
      else return acc;
    }
  }
};

}  // namespace

WPoly parse_poly(std::string_view text, const PolyGrammar& grammar) {
  Parser p(text, grammar);
  WPoly out = p.expr();
  if (!p.at_end()) p.fail("trailing input", p.pos);
  return out;
}

TPoly parse_tpoly(std::string_view text, const std::string& field) {
  PolyGrammar g;
  g.allow_x = g.allow_y = g.allow_z = false;
  g.field = field;
  WPoly p = parse_poly(text, g);
  // Only t was allowed, so the polynomial is a lone constant term.
  if (p.is_zero()) return TPoly();
  return p.terms().begin()->second;
}

}  // namespace k3fib
