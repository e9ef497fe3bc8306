// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "drinfeld/base_arith/poly.hpp"

namespace drinfeld {

// Element of F_r(theta) in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc zero(FieldPtr field);
  static RatFunc one(FieldPtr field);
  static RatFunc theta(FieldPtr field);
  static RatFunc constant(FieldPtr field, Fq c);

  const FieldPtr& field() const noexcept { return num_.field(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return is_polynomial() && num_.is_constant(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const;
  RatFunc pow(long long e) const;
  // x^r; coefficients lie in F_r so this is theta -> theta^r.
  RatFunc frobenius() const;
  // Valuation at a monic irreducible prime (this != 0).
  int valuation_at(const Poly& prime) const;
  // v_inf = deg den - deg num (this != 0).
  int infinite_valuation() const;

  std::string to_string(std::string_view var = "θ") const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

}  // namespace drinfeld
