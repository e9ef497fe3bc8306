// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/ore_drinfeld/drinfeld_module.hpp"

namespace drinfeld {

KDrinfeldModule drinfeld_over_k(const FieldPtr& field, std::vector<RatFunc> higher) {
  const RatFunc theta = RatFunc::theta(field);
  std::vector<RatFunc> c;
  c.reserve(higher.size() + 1);
  c.push_back(theta);
  for (RatFunc& a : higher) c.push_back(std::move(a));
  return KDrinfeldModule(OrePoly<RatFunc>(std::move(c), theta), theta);
}

KDrinfeldModule carlitz_module(const FieldPtr& field) {
  return drinfeld_over_k(field, {RatFunc::one(field)});
}

KDrinfeldModule carlitz_twist(const RatFunc& beta) {
  if (beta.is_zero()) throw Error(Errc::zero_input, "twist parameter beta must be nonzero");
  return drinfeld_over_k(beta.field(), {beta});
}

}  // namespace drinfeld
