#pragma once

// Recursive-descent parser for the polynomial grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-')* factor
//   factor := atom ('^' nat)?
//   atom   := integer | x<k> | t | '(' expr ')'
//
// Whitespace-insensitive. 't' is only valid over the t-local ring, where it
// denotes the uniformizer. '/' requires a constant divisor and uses the
// ring's (checked) division, so "3/2" works over QQ, F_p and Z_(p) with p
// odd, and fails with a positioned error where it must.

#include <cctype>
#include <string>
#include <type_traits>
#include <vector>

#include "discval/mpoly.hpp"
#include "discval/rings.hpp"
#include "discval/util.hpp"

namespace discval {

template <typename R>
class PolyParser {
 public:
  PolyParser(R ring, int nvars, std::string text)
      : ring_(std::move(ring)), nvars_(nvars), text_(std::move(text)) {}

  MPoly<R> parse() {
    MPoly<R> f = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  using P = MPoly<R>;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  P parse_expr() {
    P acc = parse_term();
    for (;;) {
      if (accept('+')) {
        acc = acc.add(parse_term());
      } else if (accept('-')) {
        acc = acc.sub(parse_term());
      } else {
        return acc;
      }
    }
  }

  P parse_term() {
    P acc = parse_unary();
    for (;;) {
      if (accept('*')) {
        acc = acc.mul(parse_unary());
      } else if (accept('/')) {
        std::size_t at = pos_;
        P divisor = parse_unary();
        if (divisor.degree() > 0) throw ParseError("divisor must be constant", at);
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        auto c = divisor.coeff(Monomial(nvars_, 0));
        P scaled(ring_, nvars_);
        try {
          for (const auto& [m, cf] : acc.terms()) scaled.add_term(m, ring_.exact_div(cf, c));
        } catch (const Error&) {
          throw ParseError("division does not stay in " + ring_.tag(), at);
        }
        acc = std::move(scaled);
      } else {
        return acc;
      }
    }
  }

  P parse_unary() {
    bool negate = false;
    for (;;) {
      if (accept('-')) {
        negate = !negate;
      } else if (accept('+')) {
        // no-op
      } else {
        break;
      }
    }
    P f = parse_factor();
    return negate ? f.neg() : f;
  }

  P parse_factor() {
    P base = parse_atom();
    if (accept('^')) {
      std::size_t at = pos_;
      long long e = parse_nat();
      if (e > 64) throw ParseError("exponent too large", at);
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  P parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      P inner = parse_expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int v = parse_int();
      return P::constant(ring_, nvars_, ring_.from_Int(v));
    }
    if (c == 'x') {
      std::size_t at = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected variable index after 'x'", pos_);
      long long idx = parse_nat();
      if (idx >= nvars_)
        throw ParseError("variable x" + std::to_string(idx) + " out of range (vars = " + std::to_string(nvars_) + ")", at);
      return P::variable(ring_, nvars_, static_cast<int>(idx));
    }
    if (c == 't') {
      if constexpr (std::is_same_v<R, TLocalRing>) {
        ++pos_;
        return P::constant(ring_, nvars_, ring_.uniformizer());
      } else {
        throw ParseError("'t' is only valid over the t-local ring", pos_);
      }
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  long long parse_nat() {
    skip_ws();
    std::size_t at = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (1LL << 40)) throw ParseError("number too large", at);
      ++pos_;
    }
    if (pos_ == at) throw ParseError("expected a number", at);
    return v;
  }

  Int parse_int() {
    skip_ws();
    std::size_t at = pos_;
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      ++pos_;
    }
    if (digits.empty()) throw ParseError("expected a number", at);
    // a leading zero would make the big-integer constructor read octal
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return Int(0);
    return Int(digits.substr(first));
  }

  R ring_;
  int nvars_;
  std::string text_;
  std::size_t pos_ = 0;
};

template <typename R>
MPoly<R> parse_poly(R ring, int nvars, const std::string& text) {
  return PolyParser<R>(std::move(ring), nvars, text).parse();
}

// A bare ring element is a 0-variable expression; parse it through a 1-variable
// polynomial and insist on a constant.
template <typename R>
typename R::Elem parse_ring_elem(R ring, const std::string& text) {
  MPoly<R> f = parse_poly(ring, 1, text);
  if (f.degree() > 0) throw ParseError("expected a ring element, got a polynomial", 0);
  return f.coeff(Monomial(1, 0));
}

}  // namespace discval
