// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "drinfeld/base_arith/poly.hpp"
#include "drinfeld/ore_drinfeld/ore_poly.hpp"

namespace drinfeld {

// A Drinfeld module over a base domain, given by the image of T. The
// constant term must be the structural image of T and the rank positive.
template <class C>
class DrinfeldModule {
 public:
  DrinfeldModule(OrePoly<C> phi_T, C theta) : phi_T_(std::move(phi_T)), theta_(std::move(theta)) {
    if (phi_T_.degree() < 1) {
      throw Error(Errc::invalid_argument, "phi_T of tau-degree 0 is not a Drinfeld module");
    }
    if (!(phi_T_.coeff(0) == theta_)) {
      throw Error(Errc::invalid_argument, "constant term of phi_T must be the image of T");
    }
  }

  const OrePoly<C>& phi_T() const noexcept { return phi_T_; }
  const C& theta() const noexcept { return theta_; }
  int rank() const noexcept { return phi_T_.degree(); }

  // phi_a by Horner evaluation of a at phi_T in the Ore ring.
  OrePoly<C> action(const Poly& a) const {
    if (a.is_zero()) throw Error(Errc::zero_input, "phi_0 is not defined as a module action");
    OrePoly<C> acc(theta_);
    for (int i = a.degree(); i >= 0; --i) {
      acc = acc * phi_T_;
      acc += OrePoly<C>::constant(scalar_like(theta_, a.coeff(i)));
    }
    return acc;
  }

 private:
  OrePoly<C> phi_T_;
  C theta_;
};

template <class C>
OrePoly<C> drinfeld_action(const DrinfeldModule<C>& phi, const Poly& a) {
  return phi.action(a);
}

using KDrinfeldModule = DrinfeldModule<RatFunc>;

// theta x + a_1 x^r + ... + a_t x^{r^t}; higher holds a_1..a_t.
KDrinfeldModule drinfeld_over_k(const FieldPtr& field, std::vector<RatFunc> higher);
// C_T = theta x + x^r.
KDrinfeldModule carlitz_module(const FieldPtr& field);
// theta x + beta x^r.
KDrinfeldModule carlitz_twist(const RatFunc& beta);

}  // namespace drinfeld
