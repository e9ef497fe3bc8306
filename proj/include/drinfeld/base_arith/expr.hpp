// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "drinfeld/base_arith/ratfunc.hpp"

namespace drinfeld {

// Parses a rational expression in one variable over F_r. Integer literals
// are element codes 0..r-1; T, t, θ, theta and x all name the variable.
// Supports + - * / ^ (integer exponents), parentheses and unary minus.
// Throws ParseError carrying the byte offset.
RatFunc parse_ratfunc(const FieldPtr& field, std::string_view text);
// Same, but the result must be a polynomial.
Poly parse_poly(const FieldPtr& field, std::string_view text);

}  // namespace drinfeld
