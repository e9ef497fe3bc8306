// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/goss_lseries/s_infinity.hpp"

#include "drinfeld/base_arith/error.hpp"

namespace drinfeld {

SInfinityPoint::SInfinityPoint(LaurentSeries x_, PAdicInt y_) : x(std::move(x_)), y(y_) {
  if (x.is_zero()) throw Error(Errc::zero_input, "x component of an exponent point must be nonzero");
}

SInfinityPoint SInfinityPoint::integer(const FieldPtr& field, long long i) {
  if (i > std::numeric_limits<int>::max() || i < -std::numeric_limits<int>::max()) {
    throw Error(Errc::bound_exceeded, "integer exponent out of range");
  }
  return {LaurentSeries::theta_power(field, static_cast<int>(i)), PAdicInt::exact(i)};
}

SInfinityPoint SInfinityPoint::special(const FieldPtr& field, int m, long long i) {
  return {LaurentSeries::theta_power(field, static_cast<int>(m - i)), PAdicInt::exact(-i)};
}

SInfinityPoint SInfinityPoint::negated(int relative_precision) const {
  PAdicInt ny{-y.value, y.digits};
  return {x.inverse(relative_precision), ny};
}

std::string SInfinityPoint::to_string() const {
  std::string ys = std::to_string(y.value);
  if (y.digits) ys += " mod p^" + std::to_string(*y.digits);
  return "(" + x.to_string(6) + ", " + ys + ")";
}

SInfinityPoint add(const SInfinityPoint& a, const SInfinityPoint& b) { return {a.x * b.x, a.y + b.y}; }

LaurentSeries a_pow_s(const Poly& a, const SInfinityPoint& s, int working_precision) {
  if (!a.is_monic()) throw Error(Errc::invalid_argument, "a^s needs monic a, got " + a.to_string());
  require_same_field(a.field(), s.field());
  const int d = a.degree();
  const LaurentSeries unit = LaurentSeries::from_poly(a) * LaurentSeries::theta_power(a.field(), -d);
  const LaurentSeries u = one_unit_pow(unit, s.y, working_precision);
  const LaurentSeries xd = s.x.pow(d, working_precision);
  LaurentSeries out = xd * u;
  if (!out.is_exact()) out = out.truncated(std::min(out.precision(), out.valuation() + working_precision));
  return out;
}

}  // namespace drinfeld
