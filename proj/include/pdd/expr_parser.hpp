// Recursive-descent parser shared by the scalar and tensor literal readers.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/' | '@') unary)*
//   unary   := ('-' | '+') unary | wedge
//   wedge   := primary ('^' (['-'] integer | primary))*
//   primary := number | 'sqrt' '(' expr ')' | identifier | '(' expr ')'
//
// `^` followed by an integer literal is a power, otherwise an exterior product;
// `@` is the tensor product. The policy decides which combinations are legal.
#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "pdd/coeff.hpp"

namespace pdd::detail {

template <class Value, class Policy>
class ExprParser {
 public:
  ExprParser(std::string_view text, Policy& policy) : s_(text), p_(policy) {}

  Value parse() {
    Value v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  template <class F>
  Value guarded(F&& f) {
    std::size_t at = i_;
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), at);
    }
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+')) {
        Value r = term();
        v = guarded([&] { return p_.add(v, r); });
      } else if (eat('-')) {
        Value r = term();
        v = guarded([&] { return p_.sub(v, r); });
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (eat('*')) {
        Value r = unary();
        v = guarded([&] { return p_.mul(v, r); });
      } else if (eat('/')) {
        Value r = unary();
        v = guarded([&] { return p_.div(v, r); });
      } else if (eat('@')) {
        Value r = unary();
        v = guarded([&] { return p_.tensor(v, r); });
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (eat('-')) {
      Value v = unary();
      return guarded([&] { return p_.neg(v); });
    }
    if (eat('+')) return unary();
    return wedge();
  }

  bool integer_follows() {
    std::size_t j = i_;
    while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
    if (j < s_.size() && s_[j] == '-') ++j;
    while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
    if (j >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[j]))) return false;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    return j >= s_.size() || s_[j] != '.';
  }

  Value wedge() {
    Value v = primary();
    while (eat('^')) {
      if (integer_follows()) {
        bool neg = eat('-');
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        int n = std::stoi(std::string(s_.substr(start, i_ - start)));
        v = guarded([&] { return p_.pow(v, neg ? -n : n); });
      } else {
        Value r = primary();
        v = guarded([&] { return p_.wedge(v, r); });
      }
    }
    return v;
  }

  Value primary() {
    char c = peek();
    if (c == '(') {
      ++i_;
      Value v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      std::string name(s_.substr(start, i_ - start));
      if (name == "sqrt") {
        if (!eat('(')) fail("expected '(' after sqrt");
        Value arg = expr();
        if (!eat(')')) fail("expected ')'");
        return guarded([&] { return p_.sqrt(arg); });
      }
      return guarded([&] { return p_.ident(name); });
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Value number() {
    std::size_t start = i_;
    std::string digits;
    std::size_t frac = 0;
    bool dot = false;
    while (i_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[i_])) || (!dot && s_[i_] == '.'))) {
      if (s_[i_] == '.') {
        dot = true;
      } else {
        digits.push_back(s_[i_]);
        if (dot) ++frac;
      }
      ++i_;
    }
    if (digits.empty()) {
      i_ = start;
      fail("malformed number");
    }
    Rational q(mpz_class(digits, 10), 1);
    if (frac > 0) {
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      q = Rational(mpz_class(digits, 10), den);
      q.canonicalize();
    }
    return p_.number(q);
  }

  std::string_view s_;
  Policy& p_;
  std::size_t i_ = 0;
};

}  // namespace pdd::detail
