// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drinfeld/base_arith/bounds.hpp"
#include "drinfeld/base_arith/laurent.hpp"
#include "drinfeld/base_arith/poly.hpp"

namespace drinfeld {

// Sum of the base-p digits of k.
int digit_weight(unsigned p, long long k);
// Largest e for which S_e(k) can be nonzero: min(k / (r-1), weight_p(k) / (m(p-1))).
int power_sum_degree_bound(const FiniteField& field, long long k);
// True when S_e(k) is known to vanish (k < e(r-1), or the weight bound).
bool power_sum_vanishes(const FiniteField& field, int e, long long k);

// S_e(k) = sum of n^k over monic n of degree e. Vanishing is detected first;
// otherwise the sum is enumerated. BoundExceeded when r^e > max_enumeration.
Poly power_sum(const FieldPtr& field, int e, long long k, const DeskBounds& bounds = {});
// S_e(0..k_max) by one enumeration pass over the monics of degree e.
std::vector<Poly> power_sums_enumerated(const FieldPtr& field, int e, int k_max,
                                        const DeskBounds& bounds = {});

// Exact power sums without enumeration, from the sums over all polynomials of
// degree < d: P_d(j) = -sum_l binom(j,l) T^{(d-1)(j-l)} P_{d-1}(l) over base-p
// submasks l < j of j with (r-1) | (j-l), and
// S_e(k) = sum_l binom(k,l) T^{e(k-l)} P_e(l).
class PowerSumTable {
 public:
  PowerSumTable(FieldPtr field, int k_max);

  const FieldPtr& field() const noexcept { return field_; }
  int k_max() const noexcept { return k_max_; }
  Poly power_sum(int e, int k);

 private:
  const Poly& all_sum(int d, int j);
  void fill_row(int d);

  FieldPtr field_;
  int k_max_;
  std::vector<std::vector<Poly>> rows_;  // rows_[d][j] = P_d(j)
};

enum class SpecialKind { zeta, carlitz };
std::string kind_name(SpecialKind kind);
SpecialKind parse_kind(const std::string& text);
// Exponent k of the power sums: i for zeta, i + 1 for Carlitz.
inline long long special_exponent(SpecialKind kind, long long i) { return kind == SpecialKind::zeta ? i : i + 1; }

// sum_e S_e(k) x^{-e}; coeffs[e] is the coefficient of x^{-e}.
struct SpecialPolynomial {
  SpecialKind kind = SpecialKind::zeta;
  int i = 0;
  int k = 0;
  std::vector<Poly> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  // e.g. "1 + x^-1", "1 + 2T*x^-1 + (T^2+1)*x^-2"
  std::string to_string() const;
};

// Text of a polynomial used as a coefficient: "" for 1, "T", "2T^2", "(T+1)".
std::string coefficient_text(const Poly& c);

SpecialPolynomial special_polynomial(const FieldPtr& field, int i, SpecialKind kind,
                                     const DeskBounds& bounds = {});
SpecialPolynomial special_polynomial(PowerSumTable& table, int i, SpecialKind kind);
// Special polynomials for i = 0..i_max from enumerated power sums, for every
// e <= k/(r-1) with r^e <= enumeration_limit; BoundExceeded when a larger e is
// not covered by the weight criterion.
std::vector<SpecialPolynomial> special_polynomials_enumerated(const FieldPtr& field, int i_max, SpecialKind kind,
                                                              std::uint64_t enumeration_limit);

// deg_x of the special polynomials for i = 0..i_max without computing their
// coefficients. A coefficient is certified nonzero by a nonvanishing value at
// a point of a large extension, and zero by the weight criterion or by
// vanishing at more points than its degree in T.
struct SpecialDegreeScan {
  SpecialKind kind = SpecialKind::zeta;
  std::vector<int> degrees;  // indexed by i
  int extension_degree = 0;
  int points_used = 0;
  int certified_zeros = 0;   // coefficients proven zero by point evaluation
};
SpecialDegreeScan special_degrees(const FieldPtr& field, int i_max, SpecialKind kind,
                                  const DeskBounds& bounds = {});

// Sum over monic n of degree e of n<n>^{i} and n<n>^{j}, compared as series
// after removing the common theta^e factor.
struct VadicRow {
  int e = 0;
  int agreement = 0;  // first exponent of 1/theta where the two sums differ (capped)
  int required = 0;   // p^M
  bool ok = false;
};
struct VadicReport {
  long long i = 0, j = 0;
  int M = 0;
  int working_precision = 0;
  std::vector<VadicRow> rows;
  bool ok() const;
};
VadicReport vadic_congruence_check(const FieldPtr& field, long long i, long long j, int M, int e_max,
                                   const DeskBounds& bounds = {});

}  // namespace drinfeld
