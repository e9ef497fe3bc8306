// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "drinfeld/ore_drinfeld/drinfeld_module.hpp"

namespace drinfeld {

using KMatrix = std::vector<std::vector<RatFunc>>;

KMatrix kmatrix_identity(const FieldPtr& field, int n);
KMatrix kmatrix_mul(const KMatrix& a, const KMatrix& b);
KMatrix kmatrix_add(const KMatrix& a, const KMatrix& b);
KMatrix kmatrix_sub(const KMatrix& a, const KMatrix& b);
KMatrix kmatrix_frobenius(const KMatrix& a);
KMatrix kmatrix_scale(const RatFunc& s, const KMatrix& a);
bool kmatrix_is_zero(const KMatrix& a);

// The n-th tensor power of the Carlitz module: psi_T = (theta I + N) + V tau
// with N the superdiagonal shift and V the single 1 in the lower-left corner.
struct TModuleCarlitzPower {
  int n = 1;
  KMatrix d_psi;  // theta I + N
  KMatrix v;

  static TModuleCarlitzPower make(const FieldPtr& field, int n);
};

// Q_0 = 1, Q_1, ... from e(c x) = psi_T(e(x)) where c is the constant term of
// psi_T; throws SingularRecursion when c^{r^i} = c for some i.
std::vector<RatFunc> exp_coefficients(const OrePoly<RatFunc>& psi_T, int n_terms);
std::vector<RatFunc> exp_coefficients(const KDrinfeldModule& phi, int n_terms);
std::vector<KMatrix> exp_coefficients(const TModuleCarlitzPower& e, int n_terms);

// E * c - psi_T * E through tau-degree n_terms - 1, with E = sum Q_i tau^i.
OrePoly<RatFunc> exp_residual(const OrePoly<RatFunc>& psi_T, const std::vector<RatFunc>& q);
// The same for C^{(x)n}: one residual matrix per tau-degree.
std::vector<KMatrix> exp_residual(const TModuleCarlitzPower& e, const std::vector<KMatrix>& q);

}  // namespace drinfeld
