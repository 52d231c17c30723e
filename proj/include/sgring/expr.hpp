/*
 *   Copyright 2026 the sgring authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sgring/canonical_sum.hpp"
#include "sgring/errors.hpp"
#include "sgring/fraction.hpp"
#include "sgring/numbers.hpp"
#include "sgring/semigroup.hpp"

namespace sgring {

// Expression surface syntax over a chosen instance. Precedence, loosest to
// tightest: '/' (fraction bar), '+'/'-', '*' (ring product, '·' is a
// synonym), '.' (semigroup product), unary minus. Parentheses override.
//
// Numerals: a numeral directly beside '*'/'·' is an integer scalar
// (3*a means a+a+a, never an element); elsewhere a numeral is resolved as
// an element name by the instance (nat+ numerals, numeric table names),
// and the bare numeral 0 is the zero ring element. A parenthesized numeral
// is always an element atom. '.'-products may contain only generator
// names, numerals and nested '.'-products.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    name,
    numeral,
    paren,
    neg,
    add,
    sub,
    mul,
    dot,
    div,
    scalar
  };

  Kind kind;
  std::size_t pos = 0;   // byte offset of the node's first token
  std::string text;      // name / numeral spelling
  Int scalar_value = 0;  // for Kind::scalar
  ExprPtr lhs;           // unary nodes use lhs only
  ExprPtr rhs;
};

/// Parenthesis-free structural rendering, for tests and diagnostics.
inline std::string debug_string(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::name:
    case Expr::Kind::numeral:
      return e->text;
    case Expr::Kind::paren:
      return debug_string(e->lhs);
    case Expr::Kind::neg:
      return "Neg(" + debug_string(e->lhs) + ")";
    case Expr::Kind::add:
      return "Add(" + debug_string(e->lhs) + "," + debug_string(e->rhs) + ")";
    case Expr::Kind::sub:
      return "Sub(" + debug_string(e->lhs) + "," + debug_string(e->rhs) + ")";
    case Expr::Kind::mul:
      return "Mul(" + debug_string(e->lhs) + "," + debug_string(e->rhs) + ")";
    case Expr::Kind::dot:
      return "SgProduct(" + debug_string(e->lhs) + "," + debug_string(e->rhs) +
             ")";
    case Expr::Kind::div:
      return "Div(" + debug_string(e->lhs) + "," + debug_string(e->rhs) + ")";
    case Expr::Kind::scalar:
      return "IntScalar(" + e->scalar_value.get_str() + "," +
             debug_string(e->lhs) + ")";
  }
  return "?";
}

namespace detail {

struct Token {
  enum class Kind {
    end,
    name,
    numeral,
    plus,
    minus,
    star,
    slash,
    dot,
    lparen,
    rparen
  };
  Kind kind;
  std::string text;
  std::size_t pos;
};

inline bool name_byte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '^' || c >= 0x80;
}

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto single = [&](Token::Kind k) {
      out.push_back(Token{k, src.substr(start, 1), start});
      ++i;
    };
    switch (c) {
      case '+': single(Token::Kind::plus); continue;
      case '-': single(Token::Kind::minus); continue;
      case '*': single(Token::Kind::star); continue;
      case '/': single(Token::Kind::slash); continue;
      case '.': single(Token::Kind::dot); continue;
      case '(': single(Token::Kind::lparen); continue;
      case ')': single(Token::Kind::rparen); continue;
      default: break;
    }
    // U+00B7 (middle dot) is a synonym for '*'
    if (c == 0xc2 && i + 1 < src.size() &&
        static_cast<unsigned char>(src[i + 1]) == 0xb7) {
      out.push_back(Token{Token::Kind::star, "\xc2\xb7", start});
      i += 2;
      continue;
    }
    if (!name_byte(c)) {
      throw SyntaxError(start, std::string("unexpected character '") +
                                   static_cast<char>(c) + "'");
    }
    bool all_digits = true;
    while (i < src.size()) {
      unsigned char b = static_cast<unsigned char>(src[i]);
      if (b == 0xc2 && i + 1 < src.size() &&
          static_cast<unsigned char>(src[i + 1]) == 0xb7) {
        break;
      }
      if (!name_byte(b)) {
        break;
      }
      if (!std::isdigit(b)) {
        all_digits = false;
      }
      ++i;
    }
    out.push_back(Token{all_digits ? Token::Kind::numeral : Token::Kind::name,
                        src.substr(start, i - start), start});
  }
  out.push_back(Token{Token::Kind::end, "", src.size()});
  return out;
}

inline bool semigroup_pure(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::name:
    case Expr::Kind::numeral:
      return true;
    case Expr::Kind::dot:
      return semigroup_pure(e->lhs) && semigroup_pure(e->rhs);
    case Expr::Kind::paren:
      return semigroup_pure(e->lhs);
    default:
      return false;
  }
}

/// A numeral literal (possibly negated), unless parenthesized.
inline bool bare_numeral(const ExprPtr& e, Int& value) {
  if (e->kind == Expr::Kind::numeral) {
    value = Int(e->text);
    return true;
  }
  if (e->kind == Expr::Kind::neg && e->lhs->kind == Expr::Kind::numeral) {
    value = -Int(e->lhs->text);
    return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : tokens_(tokenize(src)) {}

  ExprPtr run() {
    ExprPtr e = parse_div();
    if (peek().kind != Token::Kind::end) {
      throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  Token take() { return tokens_[i_++]; }

  static std::shared_ptr<Expr> node(Expr::Kind kind, std::size_t pos,
                                    ExprPtr lhs = nullptr,
                                    ExprPtr rhs = nullptr) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->pos = pos;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  ExprPtr parse_div() {
    ExprPtr e = parse_add();
    while (peek().kind == Token::Kind::slash) {
      std::size_t pos = take().pos;
      e = node(Expr::Kind::div, pos, e, parse_add());
    }
    return e;
  }

  ExprPtr parse_add() {
    ExprPtr e = parse_mul();
    while (peek().kind == Token::Kind::plus ||
           peek().kind == Token::Kind::minus) {
      Token op = take();
      ExprPtr rhs = parse_mul();
      e = node(op.kind == Token::Kind::plus ? Expr::Kind::add : Expr::Kind::sub,
               op.pos, e, rhs);
    }
    return e;
  }

  ExprPtr parse_mul() {
    ExprPtr e = parse_dot();
    while (peek().kind == Token::Kind::star) {
      std::size_t pos = take().pos;
      ExprPtr rhs = parse_dot();
      Int k;
      if (bare_numeral(e, k)) {
        auto s = node(Expr::Kind::scalar, pos, rhs);
        s->scalar_value = k;
        e = s;
      } else if (bare_numeral(rhs, k)) {
        auto s = node(Expr::Kind::scalar, pos, e);
        s->scalar_value = k;
        e = s;
      } else {
        e = node(Expr::Kind::mul, pos, e, rhs);
      }
    }
    return e;
  }

  ExprPtr parse_dot() {
    ExprPtr e = parse_unary();
    while (peek().kind == Token::Kind::dot) {
      std::size_t pos = take().pos;
      ExprPtr rhs = parse_unary();
      if (!semigroup_pure(e) || !semigroup_pure(rhs)) {
        throw SyntaxError(pos,
                          "'.' expects semigroup elements (generator names "
                          "and '.'-products)");
      }
      e = node(Expr::Kind::dot, pos, e, rhs);
    }
    return e;
  }

  ExprPtr parse_unary() {
    if (peek().kind == Token::Kind::minus) {
      std::size_t pos = take().pos;
      return node(Expr::Kind::neg, pos, parse_unary());
    }
    if (peek().kind == Token::Kind::plus) {
      take();  // unary plus is the identity
      return parse_unary();
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    Token t = take();
    switch (t.kind) {
      case Token::Kind::name:
      case Token::Kind::numeral: {
        auto e = node(t.kind == Token::Kind::name ? Expr::Kind::name
                                                  : Expr::Kind::numeral,
                      t.pos);
        e->text = t.text;
        return e;
      }
      case Token::Kind::lparen: {
        ExprPtr inner = parse_div();
        if (peek().kind != Token::Kind::rparen) {
          throw SyntaxError(peek().pos, "expected ')'");
        }
        take();
        return node(Expr::Kind::paren, t.pos, inner);
      }
      case Token::Kind::end:
        throw SyntaxError(t.pos, "unexpected end of expression");
      default:
        throw SyntaxError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(const std::string& text) {
  return detail::Parser(text).run();
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// A ring expression evaluates to a canonical sum; any '/' promotes the
/// result into the fraction field.
template <Semigroup S>
using Value = std::variant<CanonicalSum<S>, Fraction<S>>;

namespace detail {

template <Semigroup S>
typename S::element_type eval_element(const ExprPtr& e, const Handle<S>& h) {
  switch (e->kind) {
    case Expr::Kind::name:
    case Expr::Kind::numeral: {
      auto el = h->parse_element(e->text);
      if (!el) {
        throw UnknownGenerator("'" + e->text + "' does not name an element of " +
                               h->id());
      }
      return *el;
    }
    case Expr::Kind::dot:
      return h->op(eval_element(e->lhs, h), eval_element(e->rhs, h));
    case Expr::Kind::paren:
      return eval_element(e->lhs, h);
    default:
      throw SyntaxError(e->pos, "expected a semigroup element");
  }
}

template <Semigroup S>
Fraction<S> as_fraction(const Value<S>& v) {
  if (std::holds_alternative<Fraction<S>>(v)) {
    return std::get<Fraction<S>>(v);
  }
  return to_fraction(std::get<CanonicalSum<S>>(v));
}

}  // namespace detail

template <Semigroup S>
Value<S> eval_expr(const ExprPtr& e, const Handle<S>& h) {
  using V = Value<S>;
  auto combine = [&](const V& l, const V& r, auto sum_op, auto frac_op) -> V {
    if (std::holds_alternative<CanonicalSum<S>>(l) &&
        std::holds_alternative<CanonicalSum<S>>(r)) {
      return sum_op(std::get<CanonicalSum<S>>(l), std::get<CanonicalSum<S>>(r));
    }
    return frac_op(detail::as_fraction<S>(l), detail::as_fraction<S>(r));
  };

  switch (e->kind) {
    case Expr::Kind::numeral:
      if (e->text == "0") {
        return CanonicalSum<S>::zero(h);
      }
      [[fallthrough]];
    case Expr::Kind::name:
    case Expr::Kind::dot:
      return embed(h, detail::eval_element(e, h));
    case Expr::Kind::paren:
      return eval_expr<S>(e->lhs, h);
    case Expr::Kind::neg: {
      V v = eval_expr<S>(e->lhs, h);
      if (std::holds_alternative<CanonicalSum<S>>(v)) {
        return -std::get<CanonicalSum<S>>(v);
      }
      return -std::get<Fraction<S>>(v);
    }
    case Expr::Kind::scalar: {
      V v = eval_expr<S>(e->lhs, h);
      if (std::holds_alternative<CanonicalSum<S>>(v)) {
        return scale(std::get<CanonicalSum<S>>(v), e->scalar_value);
      }
      const Fraction<S>& f = std::get<Fraction<S>>(v);
      return Fraction<S>(scale(f.num(), e->scalar_value), f.den());
    }
    case Expr::Kind::add:
      return combine(eval_expr<S>(e->lhs, h), eval_expr<S>(e->rhs, h),
                     [](const auto& a, const auto& b) { return a + b; },
                     [](const auto& a, const auto& b) { return a + b; });
    case Expr::Kind::sub:
      return combine(eval_expr<S>(e->lhs, h), eval_expr<S>(e->rhs, h),
                     [](const auto& a, const auto& b) { return a - b; },
                     [](const auto& a, const auto& b) { return a - b; });
    case Expr::Kind::mul:
      return combine(eval_expr<S>(e->lhs, h), eval_expr<S>(e->rhs, h),
                     [](const auto& a, const auto& b) { return a * b; },
                     [](const auto& a, const auto& b) { return a * b; });
    case Expr::Kind::div: {
      V l = eval_expr<S>(e->lhs, h);
      V r = eval_expr<S>(e->rhs, h);
      if (std::holds_alternative<CanonicalSum<S>>(l) &&
          std::holds_alternative<CanonicalSum<S>>(r)) {
        // the formal pair itself; ZeroDenominator on a zero denominator
        return Fraction<S>(std::get<CanonicalSum<S>>(l),
                           std::get<CanonicalSum<S>>(r));
      }
      return detail::as_fraction<S>(l) / detail::as_fraction<S>(r);
    }
  }
  throw SyntaxError(e->pos, "malformed expression tree");
}

template <Semigroup S>
std::string to_string(const Value<S>& v) {
  if (std::holds_alternative<CanonicalSum<S>>(v)) {
    return to_string(std::get<CanonicalSum<S>>(v));
  }
  return to_string(std::get<Fraction<S>>(v));
}

}  // namespace sgring
