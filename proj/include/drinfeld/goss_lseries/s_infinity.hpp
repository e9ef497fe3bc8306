// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "drinfeld/base_arith/laurent.hpp"

namespace drinfeld {

// A point (x, y) of the exponent space: x a nonzero series in 1/theta, y a
// p-adic integer.
struct SInfinityPoint {
  LaurentSeries x;
  PAdicInt y;

  SInfinityPoint() = default;
  SInfinityPoint(LaurentSeries x_, PAdicInt y_);

  // (theta^i, i), standing for the integer i.
  static SInfinityPoint integer(const FieldPtr& field, long long i);
  // (x / theta^i, -i) with x = theta^m: the evaluation point of the special polynomials.
  static SInfinityPoint special(const FieldPtr& field, int m, long long i);

  const FieldPtr& field() const noexcept { return x.field(); }
  SInfinityPoint negated(int relative_precision) const;
  std::string to_string() const;
};

// Group law: (x x', y + y').
SInfinityPoint add(const SInfinityPoint& a, const SInfinityPoint& b);

// a^s = x^{deg a} <a>^y with <a> = a / theta^{deg a}, for monic a.
LaurentSeries a_pow_s(const Poly& a, const SInfinityPoint& s, int working_precision);

}  // namespace drinfeld
