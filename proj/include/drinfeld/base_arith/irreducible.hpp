// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "drinfeld/base_arith/bounds.hpp"
#include "drinfeld/base_arith/poly.hpp"

namespace drinfeld {

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible_trial(const Poly& f, const DeskBounds& bounds = {});
// Rabin's deterministic test; used for large extension moduli.
bool is_irreducible_rabin(const Poly& f);

// All monic irreducibles of degree exactly d, in lexicographic order.
std::vector<Poly> monic_irreducibles_of_degree(const FieldPtr& field, int d,
                                               const DeskBounds& bounds = {});
// All monic irreducibles of degree 1..d_max sorted by (degree, lex).
std::vector<Poly> monic_irreducibles(const FieldPtr& field, int d_max,
                                     const DeskBounds& bounds = {});
// Least monic irreducible of degree d (lexicographic).
Poly least_irreducible(const FieldPtr& field, int d);

// Monic irreducible factors with multiplicity, by trial division.
std::vector<std::pair<Poly, int>> factor_monic(const Poly& n, const std::vector<Poly>& primes);

}  // namespace drinfeld
