// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/goss_lseries/newton.hpp"

#include "drinfeld/base_arith/error.hpp"
#include <numeric>

namespace drinfeld {

std::string Slope::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::vector<NewtonSegment> newton_polygon(const std::vector<Poly>& coeffs) {
  struct Pt {
    long long x, y;
  };
  std::vector<Pt> pts;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (!coeffs[e].is_zero()) pts.push_back({static_cast<long long>(e), -static_cast<long long>(coeffs[e].degree())});
  }
  if (pts.empty()) throw Error(Errc::zero_input, "Newton polygon of the zero polynomial");
  std::vector<Pt> hull;
  for (const Pt& p : pts) {
    // Drop the last vertex while it lies on or above the chord to p.
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      if ((b.y - a.y) * (p.x - a.x) >= (p.y - a.y) * (b.x - a.x)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  std::vector<NewtonSegment> out;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const long long dx = hull[i].x - hull[i - 1].x;
    const long long dy = hull[i].y - hull[i - 1].y;
    const long long g = std::gcd(dx, dy < 0 ? -dy : dy);
    out.push_back({{dy / g, dx / g}, static_cast<int>(dx)});
  }
  return out;
}

bool has_simple_slopes(const std::vector<NewtonSegment>& polygon) {
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (polygon[i].length != 1) return false;
    if (i > 0 && !(polygon[i - 1].slope < polygon[i].slope)) return false;
  }
  return true;
}

}  // namespace drinfeld
