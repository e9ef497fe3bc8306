// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/base_arith/ext_field.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "drinfeld/base_arith/error.hpp"
#include "drinfeld/base_arith/irreducible.hpp"

namespace drinfeld {

ExtFieldPtr ExtField::make(Poly modulus) {
  if (!modulus.is_monic() || modulus.degree() < 1) {
    throw Error(Errc::invalid_argument, "extension modulus must be monic of degree >= 1");
  }
  if (!is_irreducible_rabin(modulus)) {
    throw Error(Errc::not_prime, "extension modulus " + modulus.to_string("x") + " is reducible");
  }
  return ExtFieldPtr(new ExtField(std::move(modulus)));
}

std::uint64_t ExtField::order() const noexcept {
  std::uint64_t q = 1;
  const std::uint64_t r = base()->r();
  for (int i = 0; i < degree(); ++i) {
    if (q > UINT64_MAX / r) return 0;
    q *= r;
  }
  return q;
}

GfElem ExtField::zero() const { return GfElem(shared_from_this(), Poly(base())); }
GfElem ExtField::one() const { return scalar(Fq{1}); }
GfElem ExtField::scalar(Fq c) const { return GfElem(shared_from_this(), Poly::constant(base(), c)); }
GfElem ExtField::gen() const { return from_poly(Poly::variable(base())); }
GfElem ExtField::from_poly(const Poly& p) const { return GfElem(shared_from_this(), p % modulus_); }

GfElem ExtField::from_coords(const FrVector& v) const {
  if (static_cast<int>(v.size()) != degree()) throw Error(Errc::invalid_argument, "coordinate length mismatch");
  return GfElem(shared_from_this(), Poly(base(), v));
}

GfElem ExtField::from_index(std::uint64_t index) const {
  FrVector v(degree());
  const unsigned r = base()->r();
  for (int i = 0; i < degree(); ++i) {
    v[i] = Fq{static_cast<std::uint8_t>(index % r)};
    index /= r;
  }
  return from_coords(v);
}

FrMatrix ExtField::frobenius_matrix() const {
  std::vector<FrVector> cols;
  const GfElem x = gen();
  GfElem xj = one();
  for (int j = 0; j < degree(); ++j) {
    cols.push_back(xj.frobenius().coords());
    xj *= x;
  }
  return FrMatrix::from_columns(base(), degree(), cols);
}

FrMatrix ExtField::multiplication_matrix(const GfElem& c) const {
  std::vector<FrVector> cols;
  const GfElem x = gen();
  GfElem col = c;
  for (int j = 0; j < degree(); ++j) {
    cols.push_back(col.coords());
    col *= x;
  }
  return FrMatrix::from_columns(base(), degree(), cols);
}

std::string ExtField::describe() const {
  return base()->describe() + "[x]/(" + modulus_.to_string("x") + ")";
}

ExtFieldPtr canonical_extension(const FieldPtr& base, int degree, const DeskBounds& bounds) {
  if (degree < 1) throw Error(Errc::invalid_argument, "extension degree must be >= 1");
  if (degree > bounds.max_extension_degree) {
    throw Error(Errc::bound_exceeded, "extension degree " + std::to_string(degree) +
                                          " exceeds max_extension_degree=" +
                                          std::to_string(bounds.max_extension_degree));
  }
  static std::mutex mu;
  static std::map<std::tuple<unsigned, unsigned, int>, ExtFieldPtr> cache;
  const auto key = std::make_tuple(base->p(), base->m(), degree);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ExtFieldPtr made = ExtField::make(least_irreducible(base, degree));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, made).first->second;
}

GfElem::GfElem(ExtFieldPtr field, Poly rep) : field_(std::move(field)), rep_(std::move(rep)) {}

FrVector GfElem::coords() const {
  FrVector v(field_->degree());
  for (int i = 0; i <= rep_.degree(); ++i) v[i] = rep_.coeff(i);
  return v;
}

std::uint64_t GfElem::index() const noexcept {
  std::uint64_t idx = 0;
  const unsigned r = field_->base()->r();
  for (int i = rep_.degree(); i >= 0; --i) idx = idx * r + rep_.coeff(i).code;
  return idx;
}

void GfElem::require_same(const GfElem& o) const {
  if (field_ == o.field_) return;
  if (!field_ || !o.field_ || !(field_->modulus() == o.field_->modulus())) {
    throw Error(Errc::domain_mismatch, "elements of different extension fields");
  }
}

GfElem& GfElem::operator+=(const GfElem& o) {
  require_same(o);
  rep_ += o.rep_;
  return *this;
}

GfElem& GfElem::operator-=(const GfElem& o) {
  require_same(o);
  rep_ -= o.rep_;
  return *this;
}

GfElem& GfElem::operator*=(const GfElem& o) {
  require_same(o);
  rep_ = (rep_ * o.rep_) % field_->modulus();
  return *this;
}

GfElem GfElem::operator-() const { return GfElem(field_, -rep_); }

bool operator==(const GfElem& a, const GfElem& b) noexcept {
  if (!(a.rep_ == b.rep_)) return false;
  if (a.field_ == b.field_) return true;
  return a.field_ && b.field_ && a.field_->modulus() == b.field_->modulus();
}

GfElem GfElem::scaled(Fq c) const { return GfElem(field_, rep_.scaled(c)); }

GfElem GfElem::inverse() const {
  if (is_zero()) throw Error(Errc::zero_input, "inverse of zero in " + field_->describe());
  return GfElem(field_, invmod(rep_, field_->modulus()));
}

GfElem GfElem::pow(std::uint64_t e) const { return GfElem(field_, powmod(rep_, e, field_->modulus())); }

GfElem GfElem::frobenius(int times) const {
  GfElem out = *this;
  const unsigned r = field_->base()->r();
  for (int i = 0; i < times; ++i) out = out.pow(r);
  return out;
}

GfElem evaluate(const Poly& p, const GfElem& x) {
  GfElem acc = x.field()->zero();
  for (int i = p.degree(); i >= 0; --i) {
    acc *= x;
    acc += x.field()->scalar(p.coeff(i));
  }
  return acc;
}

}  // namespace drinfeld
