#include "confal/parse.hpp"

#include <cctype>
#include <sstream>

namespace confal {

namespace {

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return std::string(s.substr(start, pos - start));
  }
  Rational number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return Rational(Integer(std::string(s.substr(start, pos - start))));
  }
};

struct Parser {
  Lexer lex;
  Context& ctx;
  bool intern;

  Poly expr() {
    bool neg = false;
    if (lex.accept('-'))
      neg = true;
    else
      lex.accept('+');
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (lex.accept('+'))
        acc = acc + term();
      else if (lex.accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (lex.accept('*')) {
        acc = acc * factor();
      } else if (lex.accept('/')) {
        std::size_t at = lex.pos;
        Poly div = factor();
        ParamField c = constant_of(div, at);
        if (c.is_zero()) throw ParseError("division by zero", at);
        acc = acc.scaled(ParamField(1) / c);
      } else {
        return acc;
      }
    }
  }

  ParamField constant_of(const Poly& p, std::size_t at) {
    if (p.is_zero()) return ParamField();
    if (p.terms().size() != 1 || !p.terms().begin()->first.empty())
      throw ParseError("divisor must be free of d and lambda variables", at);
    return p.terms().begin()->second;
  }

  Poly factor() {
    Poly base = atom();
    if (lex.accept('^')) {
      std::size_t at = lex.pos;
      if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
        throw ParseError("expected integer exponent", at);
      Rational n = lex.number();
      return base.pow(boost::multiprecision::numerator(n).convert_to<std::uint32_t>());
    }
    return base;
  }

  Poly atom() {
    char c = lex.peek();
    std::size_t at = lex.pos;
    if (c == '(') {
      lex.accept('(');
      Poly p = expr();
      if (!lex.accept(')')) throw ParseError("expected ')'", lex.pos);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(ctx, lex.number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lex.ident();
      if (auto v = ctx.find(name)) return Poly::variable(ctx, *v);
      if (!intern) throw ParseError("unknown variable name: " + name, at);
      return Poly::variable(ctx, ctx.param(name));
    }
    throw ParseError("unexpected character", at);
  }
};

std::string rat_str(const Rational& r) { return r.str(); }

// PPoly term -> (negative?, factor strings); empty factors means "1".
void ppoly_term_factors(const Mono& m, const Rational& c, const Context& ctx, bool& neg,
                        std::vector<std::string>& factors) {
  neg = c < 0;
  Rational a = neg ? Rational(-c) : c;
  if (a != 1 || m.empty()) factors.push_back(rat_str(a));
  for (auto& [v, e] : m) {
    std::string f = ctx.name(VarId{v});
    if (e > 1) f += "^" + std::to_string(e);
    factors.push_back(f);
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string ppoly_str(const PPoly& p, const Context& ctx) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    bool neg;
    std::vector<std::string> factors;
    ppoly_term_factors(it->first, it->second, ctx, neg, factors);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += join(factors, "*");
    first = false;
  }
  return out;
}

// Denominator rendering (den is monic): bare when a single variable power,
// parenthesized otherwise.
std::string den_str(const PPoly& den, const Context& ctx) {
  if (den.terms().size() == 1) {
    auto& [m, c] = *den.terms().begin();
    if (c == 1 && m.size() == 1) {
      std::string f = ctx.name(VarId{m[0].first});
      if (m[0].second > 1) f += "^" + std::to_string(m[0].second);
      return f;
    }
  }
  return "(" + ppoly_str(den, ctx) + ")";
}

// Coefficient -> (negative?, leading factor string) for use inside a product.
void coeff_factor(const ParamField& c, const Context& ctx, bool have_mono, bool& neg,
                  std::string& out) {
  const PPoly& num = c.num();
  if (num.terms().size() == 1) {
    std::vector<std::string> factors;
    auto& [m, k] = *num.terms().begin();
    ppoly_term_factors(m, k, ctx, neg, factors);
    std::string body = join(factors, "*");
    if (c.has_denominator()) {
      if (body.empty()) body = "1";
      body += "/" + den_str(c.den(), ctx);
    } else if (body == "1" && have_mono) {
      body.clear();
    }
    out = body;
    return;
  }
  neg = false;
  out = "(" + ppoly_str(num, ctx) + ")";
  if (c.has_denominator()) out += "/" + den_str(c.den(), ctx);
}

}  // namespace

Poly parse_poly(Context& ctx, std::string_view text) {
  Parser p{Lexer{text}, ctx, true};
  Poly r = p.expr();
  if (!p.lex.eof()) throw ParseError("unexpected trailing input", p.lex.pos);
  return r;
}

Poly parse_poly_strict(Context& ctx, std::string_view text) {
  Parser p{Lexer{text}, ctx, false};
  Poly r = p.expr();
  if (!p.lex.eof()) throw ParseError("unexpected trailing input", p.lex.pos);
  return r;
}

std::string to_string(const PPoly& p, const Context& ctx) { return ppoly_str(p, ctx); }

std::string mono_to_string(const Mono& m, const Context& ctx) {
  if (m.empty()) return "1";
  std::vector<std::string> factors;
  for (auto& [v, e] : m) {
    std::string f = ctx.name(VarId{v});
    if (e > 1) f += "^" + std::to_string(e);
    factors.push_back(f);
  }
  return join(factors, "*");
}

std::string to_string(const ParamField& c, const Context& ctx) {
  if (c.is_zero()) return "0";
  bool neg = false;
  std::string body;
  coeff_factor(c, ctx, false, neg, body);
  if (body.empty()) body = "1";
  return neg ? "-" + body : body;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  const Context& ctx = p.ctx();
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Mono& m = it->first;
    bool neg = false;
    std::string coeff;
    coeff_factor(it->second, ctx, !m.empty(), neg, coeff);
    std::vector<std::string> factors;
    if (!coeff.empty()) factors.push_back(coeff);
    for (auto& [v, e] : m) {
      std::string f = ctx.name(VarId{v});
      if (e > 1) f += "^" + std::to_string(e);
      factors.push_back(f);
    }
    if (factors.empty()) factors.push_back("1");
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += join(factors, "*");
    first = false;
  }
  return out;
}

}  // namespace confal
