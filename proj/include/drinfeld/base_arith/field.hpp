// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "drinfeld/base_arith/bounds.hpp"

namespace drinfeld {

// Element of F_r as an integer code: the base-p digits are the coordinates
// in the basis 1, y, ..., y^{m-1} of F_p[y]/(modulus).
struct Fq {
  std::uint8_t code = 0;
  friend constexpr bool operator==(Fq, Fq) = default;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

class FiniteField {
 public:
  unsigned p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  unsigned r() const noexcept { return r_; }
  // Coefficients over F_p, low to high, monic of degree m.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Fq zero() const noexcept { return {0}; }
  Fq one() const noexcept { return {1}; }
  Fq element(unsigned code) const;
  // Image of an integer in the prime field.
  Fq from_integer(long long n) const noexcept;

  Fq add(Fq a, Fq b) const noexcept { return {add_[a.code * r_ + b.code]}; }
  Fq sub(Fq a, Fq b) const noexcept { return {add_[a.code * r_ + neg_[b.code]]}; }
  Fq neg(Fq a) const noexcept { return {neg_[a.code]}; }
  Fq mul(Fq a, Fq b) const noexcept { return {mul_[a.code * r_ + b.code]}; }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const noexcept;
  // a^p; the absolute Frobenius generating Gal(F_r/F_p).
  Fq frobenius(Fq a) const noexcept { return {frob_[a.code]}; }

  std::vector<unsigned> coords(Fq a) const;
  std::string describe() const;

  friend std::shared_ptr<const FiniteField> field_make(unsigned, unsigned,
                                                       const DeskBounds&);

 private:
  FiniteField(unsigned p, unsigned m, std::vector<unsigned> modulus);

  unsigned p_;
  unsigned m_;
  unsigned r_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_, frob_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

bool is_prime(unsigned long long n) noexcept;

// Deterministic: the modulus is the lexicographically least monic irreducible
// of degree m over F_p.
FieldPtr field_make(unsigned p, unsigned m, const DeskBounds& bounds = {});

// Accepts "p^m", "p" or the order "r" (e.g. "4").
FieldPtr field_from_text(const std::string& text, const DeskBounds& bounds = {});

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;
void require_same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace drinfeld
