// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "drinfeld/base_arith/fr_matrix.hpp"
#include "drinfeld/base_arith/poly.hpp"

namespace drinfeld {

class GfElem;

// F_r[x]/(M) for a monic irreducible M of degree N.
class ExtField : public std::enable_shared_from_this<ExtField> {
 public:
  static std::shared_ptr<const ExtField> make(Poly modulus);

  const FieldPtr& base() const noexcept { return modulus_.field(); }
  const Poly& modulus() const noexcept { return modulus_; }
  int degree() const noexcept { return modulus_.degree(); }
  // r^N, or 0 if it does not fit in 64 bits.
  std::uint64_t order() const noexcept;

  GfElem zero() const;
  GfElem one() const;
  GfElem gen() const;
  GfElem scalar(Fq c) const;
  GfElem from_poly(const Poly& p) const;
  GfElem from_coords(const FrVector& v) const;
  // Base-r digits of index are the coordinates.
  GfElem from_index(std::uint64_t index) const;

  // Matrix of x -> x^r in the power basis.
  FrMatrix frobenius_matrix() const;
  FrMatrix multiplication_matrix(const GfElem& c) const;

  std::string describe() const;

 private:
  explicit ExtField(Poly modulus) : modulus_(std::move(modulus)) {}
  Poly modulus_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

// F_{r^N} with the lexicographically least monic irreducible modulus.
// Memoized behind a mutex; the returned field is immutable.
ExtFieldPtr canonical_extension(const FieldPtr& base, int degree,
                                const DeskBounds& bounds = {});

class GfElem {
 public:
  GfElem() = default;
  GfElem(ExtFieldPtr field, Poly rep);

  const ExtFieldPtr& field() const noexcept { return field_; }
  const Poly& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_one() const noexcept { return rep_.is_one(); }
  FrVector coords() const;
  std::uint64_t index() const noexcept;

  GfElem& operator+=(const GfElem& o);
  GfElem& operator-=(const GfElem& o);
  GfElem& operator*=(const GfElem& o);
  GfElem operator-() const;
  friend GfElem operator+(GfElem a, const GfElem& b) { return a += b; }
  friend GfElem operator-(GfElem a, const GfElem& b) { return a -= b; }
  friend GfElem operator*(GfElem a, const GfElem& b) { return a *= b; }
  friend GfElem operator/(const GfElem& a, const GfElem& b) { return a * b.inverse(); }
  friend bool operator==(const GfElem& a, const GfElem& b) noexcept;

  GfElem scaled(Fq c) const;
  GfElem inverse() const;
  GfElem pow(std::uint64_t e) const;
  // x^{r^times}.
  GfElem frobenius(int times = 1) const;

  std::string to_string() const { return rep_.to_string("x"); }

 private:
  void require_same(const GfElem& o) const;

  ExtFieldPtr field_;
  Poly rep_;
};

// Evaluates a polynomial over F_r at an extension element.
GfElem evaluate(const Poly& p, const GfElem& x);

}  // namespace drinfeld
