// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/base_arith/expr.hpp"

#include <cctype>

#include "drinfeld/base_arith/error.hpp"

namespace drinfeld {
namespace {

class Parser {
 public:
  Parser(const FieldPtr& field, std::string_view text) : field_(field), s_(text) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse_error,
                msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || variable_length() > 0;
  }

  std::size_t variable_length() const {
    const std::string_view rest = s_.substr(pos_);
    if (rest.starts_with("theta")) return 5;
    if (rest.starts_with("θ")) return std::string_view("θ").size();
    if (!rest.empty() && (rest[0] == 'T' || rest[0] == 't' || rest[0] == 'x')) return 1;
    return 0;
  }

  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RatFunc term() {
    RatFunc v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const std::size_t at = pos_;
        RatFunc d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        v /= d;
      } else if (starts_primary()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (eat('^')) {
      skip_ws();
      bool negative = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      const long long e = integer();
      if (negative && base.is_zero()) fail("negative power of zero");
      return base.pow(negative ? -e : e);
    }
    return base;
  }

  long long integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  RatFunc primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      RatFunc v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (const std::size_t n = variable_length(); n > 0) {
      pos_ += n;
      return RatFunc::theta(field_);
    }
    const std::size_t at = pos_;
    const long long c = integer();
    if (c >= static_cast<long long>(field_->r())) {
      pos_ = at;
      fail("literal " + std::to_string(c) + " is not an element code of F_" + std::to_string(field_->r()));
    }
    return RatFunc::constant(field_, field_->element(static_cast<unsigned>(c)));
  }

  const FieldPtr& field_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const FieldPtr& field, std::string_view text) { return Parser(field, text).parse(); }

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  RatFunc v = parse_ratfunc(field, text);
  if (!v.is_polynomial()) {
    throw Error(Errc::parse_error, "expected a polynomial, got '" + std::string(text) + "'");
  }
  return v.num();
}

}  // namespace drinfeld
