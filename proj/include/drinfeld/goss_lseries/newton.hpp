// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "drinfeld/goss_lseries/power_sums.hpp"

namespace drinfeld {

// Reduced fraction num/den with den > 0.
struct Slope {
  long long num = 0;
  long long den = 1;
  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& a, const Slope& b) { return a.num * b.den < b.num * a.den; }
  std::string to_string() const;
};

struct NewtonSegment {
  Slope slope;
  int length = 0;  // horizontal length, in powers of x^{-1}
};

// Lower convex hull of (e, v_inf(coeff_e)) = (e, -deg coeff_e) over the nonzero
// coefficients of a polynomial in x^{-1}; segments in increasing slope order.
std::vector<NewtonSegment> newton_polygon(const std::vector<Poly>& coeffs);
inline std::vector<NewtonSegment> newton_polygon(const SpecialPolynomial& sp) { return newton_polygon(sp.coeffs); }

// Strictly increasing slopes and every segment of length 1.
bool has_simple_slopes(const std::vector<NewtonSegment>& polygon);

}  // namespace drinfeld
