// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "drinfeld/base_arith/ratfunc.hpp"

namespace drinfeld {

// Truncated series sum c_k t^k in t = 1/theta over F_r, known modulo
// t^precision. Coefficients are stored from the valuation up to the last
// nonzero one; every other coefficient below the precision is zero.
class LaurentSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  LaurentSeries() = default;
  LaurentSeries(FieldPtr field, int valuation, std::vector<Fq> coeffs, int precision);

  static LaurentSeries zero(FieldPtr field, int precision = kExact);
  static LaurentSeries one(FieldPtr field);
  // c * t^exponent, exact.
  static LaurentSeries monomial(FieldPtr field, Fq c, int exponent);
  static LaurentSeries theta_power(FieldPtr field, int k) {
    return monomial(std::move(field), Fq{1}, -k);
  }
  // A polynomial in theta, exact.
  static LaurentSeries from_poly(const Poly& p);
  static LaurentSeries from_ratfunc(const RatFunc& x, int relative_precision);

  const FieldPtr& field() const noexcept { return field_; }
  // kExact for the exact zero; equals the precision for an inexact zero.
  int valuation() const noexcept { return valuation_; }
  int precision() const noexcept { return precision_; }
  bool is_exact() const noexcept { return precision_ == kExact; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int relative_precision() const noexcept;
  Fq coeff(int exponent) const;
  Fq leading() const noexcept;
  const std::vector<Fq>& coeffs() const noexcept { return coeffs_; }
  // Valuation 0 with leading coefficient 1.
  bool is_one_unit() const noexcept;

  LaurentSeries truncated(int precision) const;
  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries scaled(Fq c) const;
  // Inverse with at most relative_precision correct coefficients; exact for
  // exact monomials.
  LaurentSeries inverse(int relative_precision) const;
  LaurentSeries pow(long long e, int relative_precision) const;
  // Substitutes t -> t^(p^j) and raises coefficients to p^j: the p^j-th power.
  LaurentSeries frobenius_power(int j) const;

  // First exponent at which the two series are known to differ, capped by
  // the smaller precision.
  int agreement(const LaurentSeries& o) const;
  bool agrees_to(const LaurentSeries& o, int precision) const {
    return agreement(o) >= precision;
  }

  std::string to_string(int max_terms = 12) const;

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) noexcept {
    return a.valuation_ == b.valuation_ && a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  FieldPtr field_;
  int valuation_ = kExact;
  std::vector<Fq> coeffs_;
  int precision_ = kExact;
};

// An exact integer, or a p-adic integer known modulo p^digits.
struct PAdicInt {
  long long value = 0;
  std::optional<int> digits;

  static PAdicInt exact(long long v) { return {v, std::nullopt}; }
  static PAdicInt truncated(long long residue, int digits) { return {residue, digits}; }
  bool is_exact() const noexcept { return !digits.has_value(); }
  // Non-negative representative modulo p^L (L <= digits when truncated).
  std::uint64_t residue(unsigned p, int L) const;
  friend PAdicInt operator+(const PAdicInt& a, const PAdicInt& b);
};

// u^y for a 1-unit u, through base-p digits of y: u^y = prod (u^{p^j})^{y_j}.
// A p-adic y known mod p^M limits the result to precision p^M; negative or
// p-adic exponents use working_precision.
LaurentSeries one_unit_pow(const LaurentSeries& u, const PAdicInt& y, int working_precision);

struct NotAPower {
  std::string reason;
};

// alpha with alpha^{r-1} = beta to the given relative precision.
std::variant<LaurentSeries, NotAPower> root_pow_r_minus_1(const RatFunc& beta, int precision);

}  // namespace drinfeld
