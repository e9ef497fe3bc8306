// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/base_arith/error.hpp"
#include "drinfeld/ore_drinfeld/coefficient_domain.hpp"

namespace drinfeld {

// sum c_i tau^i with tau c = c^r tau. The prototype element fixes the
// coefficient domain so that the zero polynomial still knows where it lives.
template <class C>
class OrePoly {
 public:
  OrePoly() = default;
  explicit OrePoly(const C& proto) : zero_(zero_like(proto)) {}
  OrePoly(std::vector<C> coeffs, const C& proto) : zero_(zero_like(proto)), c_(std::move(coeffs)) {
    trim();
  }

  static OrePoly constant(const C& c) { return OrePoly(std::vector<C>{c}, c); }
  static OrePoly tau(const C& proto) {
    return OrePoly(std::vector<C>{zero_like(proto), scalar_like(proto, Fq{1})}, proto);
  }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const C& coeff(int i) const noexcept {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? zero_ : c_[i];
  }
  const std::vector<C>& coeffs() const noexcept { return c_; }
  const C& prototype() const noexcept { return zero_; }

  OrePoly& operator+=(const OrePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  OrePoly& operator-=(const OrePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }

  friend OrePoly operator*(const OrePoly& a, const OrePoly& b) {
    if (a.c_.empty() || b.c_.empty()) return OrePoly(a.zero_);
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    std::vector<C> twisted = b.c_;  // b coefficients raised to r^i
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (i > 0) {
        for (C& c : twisted) c = frobenius(c);
      }
      if (drinfeld::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < twisted.size(); ++j) out[i + j] += a.c_[i] * twisted[j];
    }
    return OrePoly(std::move(out), a.zero_);
  }

  OrePoly scaled_left(const C& s) const {
    std::vector<C> out = c_;
    for (C& c : out) c = s * c;
    return OrePoly(std::move(out), zero_);
  }

  // The associated F_r-linear polynomial evaluated at x: sum c_i x^{r^i}.
  C evaluate(const C& x) const {
    C acc = zero_;
    C power = x;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i > 0) power = frobenius(power);
      acc += c_[i] * power;
    }
    return acc;
  }

  // Sparse F_r-linear polynomial: (exponent r^i, coefficient) pairs.
  std::vector<std::pair<std::uint64_t, C>> to_linearized(unsigned r) const {
    std::vector<std::pair<std::uint64_t, C>> out;
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < c_.size(); ++i, e *= r) {
      if (!drinfeld::is_zero(c_[i])) out.emplace_back(e, c_[i]);
    }
    return out;
  }

  static OrePoly from_linearized(const std::vector<std::pair<std::uint64_t, C>>& terms, unsigned r,
                                 const C& proto) {
    std::vector<C> c;
    for (const auto& [e, coeff] : terms) {
      std::uint64_t x = e;
      std::size_t i = 0;
      while (x > 1 && x % r == 0) {
        x /= r;
        ++i;
      }
      if (x != 1) {
        throw Error(Errc::invalid_argument,
                    "exponent " + std::to_string(e) + " is not a power of r; not F_r-linear");
      }
      if (c.size() <= i) c.resize(i + 1, zero_like(proto));
      c[i] += coeff;
    }
    return OrePoly(std::move(c), proto);
  }

  friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.c_ == b.c_; }

  template <class Fmt>
  std::string to_string(Fmt&& fmt) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (drinfeld::is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + fmt(c_[i]) + ")";
      if (i == 1) out += "τ";
      if (i > 1) out += "τ^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && drinfeld::is_zero(c_.back())) c_.pop_back();
  }

  C zero_;
  std::vector<C> c_;
};

}  // namespace drinfeld
