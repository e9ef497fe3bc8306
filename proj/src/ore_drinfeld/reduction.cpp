// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/ore_drinfeld/reduction.hpp"

#include <algorithm>
#include <cstdlib>

namespace drinfeld {

GfElem reduce_at(const RatFunc& c, const ExtFieldPtr& residue_field) {
  const Poly& f = residue_field->modulus();
  const Poly den = c.den() % f;
  if (den.is_zero()) {
    throw Error(Errc::bad_prime, c.to_string() + " has a pole at " + f.to_string());
  }
  return residue_field->from_poly(mulmod(c.num(), invmod(den, f), f));
}

std::variant<ReducedModule, BadReduction> reduce_mod_prime(const KDrinfeldModule& phi, const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) {
    throw Error(Errc::invalid_argument, "reduction needs a monic prime, got " + f.to_string());
  }
  const FieldPtr& field = f.field();
  const long long r = field->r();
  const int t = phi.rank();
  std::vector<int> val(t + 1, 0);
  std::vector<long long> weight(t + 1, 0);  // r^i - 1
  int bound = 0;
  long long ri = 1;
  for (int i = 1; i <= t; ++i) {
    ri *= r;
    weight[i] = ri - 1;
    const RatFunc& a = phi.phi_T().coeff(i);
    if (a.is_zero()) continue;
    val[i] = a.valuation_at(f);
    bound = std::max(bound, std::abs(val[i]));
  }
  bound += 1;
  // Search order 0, 1, -1, 2, -2, ...
  for (int step = 0; step <= 2 * bound; ++step) {
    const int j = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    bool ok = true;
    for (int i = 1; i <= t && ok; ++i) {
      if (phi.phi_T().coeff(i).is_zero()) continue;
      const long long v = val[i] + j * weight[i];
      if (v < 0 || (i == t && v != 0)) ok = false;
    }
    if (!ok) continue;
    const RatFunc u = RatFunc(f).pow(j);
    ExtFieldPtr Ff = ExtField::make(f);
    const GfElem theta_bar = Ff->gen();
    std::vector<GfElem> reduced{theta_bar};
    std::vector<RatFunc> twisted;
    for (int i = 1; i <= t; ++i) {
      const RatFunc a = phi.phi_T().coeff(i) * u.pow(weight[i]);
      twisted.push_back(a);
      reduced.push_back(reduce_at(a, Ff));
    }
    DrinfeldModule<GfElem> module(OrePoly<GfElem>(std::move(reduced), theta_bar), theta_bar);
    return ReducedModule{std::move(module), f, Ff, j, u, std::move(twisted), bound};
  }
  std::string reason = "no twist f(theta)^j with |j| <= " + std::to_string(bound) +
                       " gives integral coefficients with a unit leading coefficient (valuations";
  for (int i = 1; i <= t; ++i) reason += " " + std::to_string(val[i]);
  reason += ")";
  return BadReduction{f, reason, bound};
}

}  // namespace drinfeld
