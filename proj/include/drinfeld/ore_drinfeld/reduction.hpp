// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "drinfeld/ore_drinfeld/drinfeld_module.hpp"

namespace drinfeld {

// Image of an f-integral element of k in F_f = F_r[x]/(f).
GfElem reduce_at(const RatFunc& c, const ExtFieldPtr& residue_field);

struct ReducedModule {
  DrinfeldModule<GfElem> module;
  Poly prime;
  ExtFieldPtr residue_field;
  // The model used: x -> u x with u = f(theta)^twist_exponent.
  int twist_exponent = 0;
  RatFunc twist;
  std::vector<RatFunc> twisted_coefficients;  // a_1..a_t of the integral model
  int search_bound = 0;
};

struct BadReduction {
  Poly prime;
  std::string reason;
  int search_bound = 0;
};

// Searches twists u = f(theta)^j, |j| <= max |v_f(a_i)| + 1, acting by
// a_i -> u^{r^i - 1} a_i, for a model with f-integral coefficients and an
// f-unit leading coefficient.
std::variant<ReducedModule, BadReduction> reduce_mod_prime(const KDrinfeldModule& phi, const Poly& f);

}  // namespace drinfeld
