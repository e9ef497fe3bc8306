// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/base_arith/field.hpp"

namespace drinfeld {

// Dense univariate polynomial over F_r, coefficients low to high with no
// trailing zeros. Used for A = F_r[T], for polynomials in theta and as the
// representation of extension-field elements.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Fq> coeffs);

  static Poly constant(FieldPtr field, Fq c);
  static Poly monomial(FieldPtr field, Fq c, int degree);
  static Poly variable(FieldPtr field);
  static Poly from_codes(FieldPtr field, const std::vector<unsigned>& codes);
  // Monic polynomial of the given degree whose lower coefficients are the
  // base-r digits of index (c_0 least significant), so index order is the
  // lexicographic order read from the top coefficient down.
  static Poly monic_from_index(FieldPtr field, int degree, std::uint64_t index);

  const FieldPtr& field() const noexcept { return field_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept;
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept;
  Fq coeff(int i) const noexcept;
  Fq leading() const noexcept;
  std::span<const Fq> coeffs() const noexcept { return c_; }
  std::vector<unsigned> codes() const;
  std::uint64_t lower_index() const noexcept;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(Fq c) const;
  Poly shifted(int k) const;
  Poly monic() const;
  Poly pow(std::uint64_t e) const;
  // p(T^s); equals p^s when s is a power of r.
  Poly inflate(int s) const;
  Poly compose(const Poly& g) const;
  Poly derivative() const;
  Fq eval(Fq x) const noexcept;

  std::string to_string(std::string_view var = "T") const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept;
  // Order by degree, then lexicographically from the top coefficient down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

 private:
  void trim() noexcept;
  void require_field() const;

  FieldPtr field_;
  std::vector<Fq> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

struct XGcd {
  Poly g, s, t;  // s a + t b = g, g monic
};
XGcd xgcd(const Poly& a, const Poly& b);

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod);
Poly powmod(Poly base, std::uint64_t e, const Poly& mod);
// Inverse of a modulo mod; throws NotAUnitModV when gcd(a, mod) != 1.
Poly invmod(const Poly& a, const Poly& mod);
// Multiplicity of the irreducible prime in a (a != 0).
int valuation(Poly a, const Poly& prime);

struct CrtState {
  Poly value;
  Poly modulus;
};
// Combines x = a mod m with the accumulated state (moduli pairwise coprime).
CrtState crt_combine(const CrtState& acc, const Poly& a, const Poly& m);

}  // namespace drinfeld
