// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/base_arith/ratfunc.hpp"

#include "drinfeld/base_arith/error.hpp"

namespace drinfeld {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), Fq{1})) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::zero_input, "rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::zero(FieldPtr field) { return RatFunc(Poly(std::move(field))); }
RatFunc RatFunc::one(FieldPtr field) { return RatFunc(Poly::constant(std::move(field), Fq{1})); }
RatFunc RatFunc::theta(FieldPtr field) { return RatFunc(Poly::variable(std::move(field))); }
RatFunc RatFunc::constant(FieldPtr field, Fq c) {
  return RatFunc(Poly::constant(std::move(field), c));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.field(), Fq{1});
    if (!num_.field()) num_ = Poly(den_.field());
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  const Fq lead = den_.leading();
  if (lead.code != 1) {
    const Fq li = den_.field()->inv(lead);
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc out(*this);
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(Errc::zero_input, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc out(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
  return out;
}

RatFunc RatFunc::frobenius() const {
  const int r = static_cast<int>(field()->r());
  RatFunc out;
  out.num_ = num_.inflate(r);
  out.den_ = den_.inflate(r);
  return out;
}

int RatFunc::valuation_at(const Poly& prime) const {
  if (is_zero()) throw Error(Errc::zero_input, "valuation of zero rational function");
  return valuation(num_, prime) - valuation(den_, prime);
}

int RatFunc::infinite_valuation() const {
  if (is_zero()) throw Error(Errc::zero_input, "valuation of zero rational function");
  return den_.degree() - num_.degree();
}

std::string RatFunc::to_string(std::string_view var) const {
  auto wrap = [&](const Poly& p) {
    std::string s = p.to_string(var);
    const bool single = s.find('+') == std::string::npos;
    return single ? s : "(" + s + ")";
  };
  if (is_polynomial()) return num_.to_string(var);
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace drinfeld
