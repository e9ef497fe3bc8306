// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/ore_drinfeld/exp.hpp"

namespace drinfeld {

KMatrix kmatrix_identity(const FieldPtr& field, int n) {
  KMatrix m(n, std::vector<RatFunc>(n, RatFunc::zero(field)));
  for (int i = 0; i < n; ++i) m[i][i] = RatFunc::one(field);
  return m;
}

KMatrix kmatrix_mul(const KMatrix& a, const KMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  const FieldPtr& F = a[0][0].field();
  KMatrix out(n, std::vector<RatFunc>(m, RatFunc::zero(F)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

KMatrix kmatrix_add(const KMatrix& a, const KMatrix& b) {
  KMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

KMatrix kmatrix_sub(const KMatrix& a, const KMatrix& b) {
  KMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

KMatrix kmatrix_frobenius(const KMatrix& a) {
  KMatrix out = a;
  for (auto& row : out)
    for (auto& x : row) x = x.frobenius();
  return out;
}

KMatrix kmatrix_scale(const RatFunc& s, const KMatrix& a) {
  KMatrix out = a;
  for (auto& row : out)
    for (auto& x : row) x = s * x;
  return out;
}

bool kmatrix_is_zero(const KMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

TModuleCarlitzPower TModuleCarlitzPower::make(const FieldPtr& field, int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "tensor power must be >= 1");
  TModuleCarlitzPower e;
  e.n = n;
  e.d_psi = kmatrix_scale(RatFunc::theta(field), kmatrix_identity(field, n));
  for (int i = 0; i + 1 < n; ++i) e.d_psi[i][i + 1] = RatFunc::one(field);
  e.v.assign(n, std::vector<RatFunc>(n, RatFunc::zero(field)));
  e.v[n - 1][0] = RatFunc::one(field);
  return e;
}

std::vector<RatFunc> exp_coefficients(const OrePoly<RatFunc>& psi_T, int n_terms) {
  if (n_terms < 1) throw Error(Errc::invalid_argument, "n_terms must be >= 1");
  const RatFunc& c = psi_T.coeff(0);
  const FieldPtr& F = c.field();
  std::vector<RatFunc> q{RatFunc::one(F)};
  RatFunc c_power = c;  // c^{r^i}
  for (int i = 1; i < n_terms; ++i) {
    c_power = c_power.frobenius();
    const RatFunc diag = c_power - c;
    if (diag.is_zero()) {
      throw Error(Errc::singular_recursion, "diagonal term vanishes at tau-degree " + std::to_string(i));
    }
    // Coefficient of x^{r^i} in e(c x) = psi_T(e(x)).
    RatFunc rhs = RatFunc::zero(F);
    for (int j = 1; j <= std::min(i, psi_T.degree()); ++j) {
      if (psi_T.coeff(j).is_zero()) continue;
      RatFunc twisted = q[i - j];
      for (int k = 0; k < j; ++k) twisted = twisted.frobenius();
      rhs += psi_T.coeff(j) * twisted;
    }
    q.push_back(rhs / diag);
  }
  return q;
}

std::vector<RatFunc> exp_coefficients(const KDrinfeldModule& phi, int n_terms) {
  return exp_coefficients(phi.phi_T(), n_terms);
}

std::vector<KMatrix> exp_coefficients(const TModuleCarlitzPower& e, int n_terms) {
  if (n_terms < 1) throw Error(Errc::invalid_argument, "n_terms must be >= 1");
  const FieldPtr& F = e.d_psi[0][0].field();
  const RatFunc theta = RatFunc::theta(F);
  KMatrix nil = e.d_psi;
  for (int i = 0; i < e.n; ++i) nil[i][i] = RatFunc::zero(F);
  std::vector<KMatrix> q{kmatrix_identity(F, e.n)};
  RatFunc theta_power = theta;
  for (int i = 1; i < n_terms; ++i) {
    theta_power = theta_power.frobenius();
    const RatFunc diag = theta_power - theta;
    if (diag.is_zero()) {
      throw Error(Errc::singular_recursion, "diagonal term vanishes at tau-degree " + std::to_string(i));
    }
    // Solve diag Q + Q N - N Q = V Q_{i-1}^{(r)}: the commutator with N is
    // nilpotent, so the Neumann series terminates.
    const KMatrix rhs = kmatrix_mul(e.v, kmatrix_frobenius(q[i - 1]));
    const RatFunc inv = diag.inverse();
    KMatrix term = kmatrix_scale(inv, rhs);
    KMatrix sol = term;
    for (int k = 1; k <= 2 * e.n; ++k) {
      const KMatrix ad = kmatrix_sub(kmatrix_mul(term, nil), kmatrix_mul(nil, term));
      if (kmatrix_is_zero(ad)) break;
      term = kmatrix_scale(-inv, ad);
      sol = kmatrix_add(sol, term);
    }
    q.push_back(std::move(sol));
  }
  return q;
}

OrePoly<RatFunc> exp_residual(const OrePoly<RatFunc>& psi_T, const std::vector<RatFunc>& q) {
  const RatFunc& c = psi_T.coeff(0);
  const OrePoly<RatFunc> E(q, c);
  const OrePoly<RatFunc> lhs = E * OrePoly<RatFunc>::constant(c);
  const OrePoly<RatFunc> rhs = psi_T * E;
  std::vector<RatFunc> diff;
  for (std::size_t i = 0; i < q.size(); ++i) diff.push_back(lhs.coeff(static_cast<int>(i)) - rhs.coeff(static_cast<int>(i)));
  return OrePoly<RatFunc>(std::move(diff), c);
}

std::vector<KMatrix> exp_residual(const TModuleCarlitzPower& e, const std::vector<KMatrix>& q) {
  std::vector<KMatrix> out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    KMatrix twisted_dpsi = e.d_psi;
    for (std::size_t k = 0; k < i; ++k) twisted_dpsi = kmatrix_frobenius(twisted_dpsi);
    KMatrix res = kmatrix_sub(kmatrix_mul(q[i], twisted_dpsi), kmatrix_mul(e.d_psi, q[i]));
    if (i > 0) res = kmatrix_sub(res, kmatrix_mul(e.v, kmatrix_frobenius(q[i - 1])));
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace drinfeld
