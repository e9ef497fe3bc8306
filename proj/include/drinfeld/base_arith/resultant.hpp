// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "drinfeld/base_arith/poly.hpp"

namespace drinfeld {

// Polynomial in theta with coefficients in A = F_r[T]: entry i is the
// coefficient of theta^i.
using BiPoly = std::vector<Poly>;

// Fraction-free (Bareiss) determinant of a square matrix over A.
Poly determinant(std::vector<std::vector<Poly>> m);

// Res_theta(f, g) for f monic nonconstant with F_r coefficients. Equals the
// product of g(T, root) over the roots of f.
Poly resultant(const Poly& f, const BiPoly& g);
// Convenience for g with F_r coefficients; the result is a constant.
Fq resultant_constant(const Poly& f, const Poly& g);

}  // namespace drinfeld
