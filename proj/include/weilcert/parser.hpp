#pragma once

// Recursive descent parser for polynomial expressions.
//
//   expr     := term (("+" | "-") term)*
//   term     := factor ("*" factor)*
//   factor   := "-" factor | base ("^" uint)?
//   base     := rational | "i" | identifier | "(" expr ")"
//   rational := uint ("/" uint)?
//
// Multiplication is always explicit. Whitespace (including newlines) is
// ignored; errors report 1-based line and column.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weilcert/error.hpp"
#include "weilcert/exactnum.hpp"
#include "weilcert/multipoly.hpp"

namespace weilcert {

struct PolyExpression {
  enum class Kind { Rational, ImaginaryUnit, Variable, Sum, Difference, Product, Power, Group, Negation };

  Kind kind = Kind::Rational;
  Rational value;             // Rational
  std::string name;           // Variable
  unsigned exponent = 0;      // Power
  std::vector<PolyExpression> children;
  std::size_t line = 1;
  std::size_t column = 1;
};

namespace detail {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t k = 0;
  auto advance = [&] {
    if (src[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++k;
  };
  while (k < src.size()) {
    const char c = src[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    const std::size_t l0 = line;
    const std::size_t c0 = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
        digits += src[k];
        advance();
      }
      out.push_back({Tok::Number, std::move(digits), l0, c0});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (k < src.size() && (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_')) {
        id += src[k];
        advance();
      }
      out.push_back({Tok::Ident, std::move(id), l0, c0});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw SyntaxError(l0, c0, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), l0, c0});
    advance();
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  PolyExpression parse() {
    PolyExpression e = expr();
    if (peek().kind != Tok::End) fail("expected '+', '-', '*' or end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.line, t.column, expected + ", found " + found);
  }

  static PolyExpression node(PolyExpression::Kind kind, const Token& at) {
    PolyExpression e;
    e.kind = kind;
    e.line = at.line;
    e.column = at.column;
    return e;
  }

  PolyExpression expr() {
    PolyExpression lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      PolyExpression e =
          node(op.kind == Tok::Plus ? PolyExpression::Kind::Sum : PolyExpression::Kind::Difference, op);
      e.children.push_back(std::move(lhs));
      e.children.push_back(term());
      lhs = std::move(e);
    }
    return lhs;
  }

  PolyExpression term() {
    PolyExpression lhs = factor();
    while (peek().kind == Tok::Star) {
      const Token& op = next();
      PolyExpression e = node(PolyExpression::Kind::Product, op);
      e.children.push_back(std::move(lhs));
      e.children.push_back(factor());
      lhs = std::move(e);
    }
    return lhs;
  }

  PolyExpression factor() {
    if (peek().kind == Tok::Minus) {
      PolyExpression e = node(PolyExpression::Kind::Negation, next());
      e.children.push_back(factor());
      return e;
    }
    PolyExpression b = base();
    if (peek().kind == Tok::Caret) {
      PolyExpression e = node(PolyExpression::Kind::Power, next());
      if (peek().kind != Tok::Number) fail("expected a non-negative integer exponent");
      const Token& n = next();
      if (n.text.size() > 6) throw SyntaxError(n.line, n.column, "exponent too large");
      e.exponent = static_cast<unsigned>(std::stoul(n.text));
      e.children.push_back(std::move(b));
      return e;
    }
    return b;
  }

  PolyExpression base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        PolyExpression e = node(PolyExpression::Kind::Rational, t);
        mpz_class num(t.text);
        mpz_class den(1);
        if (peek().kind == Tok::Slash) {
          next();
          if (peek().kind != Tok::Number) fail("expected a denominator");
          const Token& d = next();
          den = mpz_class(d.text);
          if (den == 0) throw SyntaxError(d.line, d.column, "zero denominator");
        }
        e.value = Rational(num, den);
        return e;
      }
      case Tok::Ident: {
        next();
        if (t.text == "i") return node(PolyExpression::Kind::ImaginaryUnit, t);
        PolyExpression e = node(PolyExpression::Kind::Variable, t);
        e.name = t.text;
        return e;
      }
      case Tok::LParen: {
        PolyExpression e = node(PolyExpression::Kind::Group, next());
        e.children.push_back(expr());
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        return e;
      }
      default:
        fail("expected a number, identifier, 'i', '(' or '-'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PolyExpression parse_expression(std::string_view input) { return detail::Parser(input).parse(); }

inline Polynomial lower(const PolyExpression& e, const RegistryPtr& reg) {
  using K = PolyExpression::Kind;
  switch (e.kind) {
    case K::Rational: return Polynomial(reg, GaussianRational(e.value));
    case K::ImaginaryUnit: return Polynomial(reg, GaussianRational::i());
    case K::Variable:
      if (!reg->index_of(e.name)) throw UnknownVariable(e.name);
      return Polynomial::variable(reg, e.name);
    case K::Sum: return lower(e.children[0], reg) + lower(e.children[1], reg);
    case K::Difference: return lower(e.children[0], reg) - lower(e.children[1], reg);
    case K::Product: return lower(e.children[0], reg) * lower(e.children[1], reg);
    case K::Power: return pow(lower(e.children[0], reg), e.exponent);
    case K::Group: return lower(e.children[0], reg);
    case K::Negation: return -lower(e.children[0], reg);
  }
  throw Error("corrupt expression tree");
}

inline Polynomial parse_poly(std::string_view input, const RegistryPtr& reg) {
  return lower(parse_expression(input), reg);
}

/// A constant expression such as "3/4", "-1/2+1/3*i" or "(1+i)^2".
inline GaussianRational parse_gaussian(std::string_view input) {
  static const RegistryPtr empty = make_registry({});
  return parse_poly(input, empty).constant_term();
}

inline Rational parse_rational(std::string_view input) {
  const GaussianRational z = parse_gaussian(input);
  if (!z.is_real()) throw Error("expected a rational number, got " + z.to_string());
  return z.re();
}

}  // namespace weilcert
