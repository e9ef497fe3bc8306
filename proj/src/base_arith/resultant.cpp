// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/base_arith/resultant.hpp"

#include <utility>

#include "drinfeld/base_arith/error.hpp"

namespace drinfeld {

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::invalid_argument, "determinant of an empty matrix");
  const FieldPtr field = m[0][0].field();
  Poly prev = Poly::constant(field, Fq{1});
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Poly(field);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = prev.degree() == 0 && prev.is_one() ? std::move(num) : num / prev;
      }
      m[i][k] = Poly(field);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

Poly resultant(const Poly& f, const BiPoly& g_in) {
  if (!f.is_monic() || f.degree() < 1) {
    throw Error(Errc::invalid_argument, "resultant needs f monic of positive degree");
  }
  BiPoly g = g_in;
  while (!g.empty() && g.back().is_zero()) g.pop_back();
  if (g.empty()) throw Error(Errc::zero_input, "resultant with zero second argument");
  const FieldPtr& field = f.field();
  for (const Poly& c : g) {
    if (c.field()) require_same_field(field, c.field());
  }
  const int m = f.degree();
  const int n = static_cast<int>(g.size()) - 1;
  const int size = m + n;
  std::vector<std::vector<Poly>> syl(size, std::vector<Poly>(size, Poly(field)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) syl[i][i + k] = Poly::constant(field, f.coeff(m - k));
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) {
      const Poly& c = g[n - k];
      syl[n + i][i + k] = c.field() ? c : Poly(field);
    }
  }
  return determinant(std::move(syl));
}

Fq resultant_constant(const Poly& f, const Poly& g) {
  BiPoly lifted;
  for (int i = 0; i <= g.degree(); ++i) lifted.push_back(Poly::constant(f.field(), g.coeff(i)));
  const Poly res = resultant(f, lifted);
  return res.coeff(0);
}

}  // namespace drinfeld
