// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/base_arith/poly.hpp"

#include <algorithm>
#include <sstream>

#include "drinfeld/base_arith/error.hpp"

namespace drinfeld {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Fq> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(FieldPtr field, Fq c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Fq c, int degree) {
  if (c.code == 0) return Poly(std::move(field));
  std::vector<Fq> v(static_cast<std::size_t>(degree) + 1);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::variable(FieldPtr field) { return monomial(std::move(field), Fq{1}, 1); }

Poly Poly::from_codes(FieldPtr field, const std::vector<unsigned>& codes) {
  std::vector<Fq> v;
  v.reserve(codes.size());
  for (unsigned c : codes) v.push_back(field->element(c));
  return Poly(std::move(field), std::move(v));
}

Poly Poly::monic_from_index(FieldPtr field, int degree, std::uint64_t index) {
  std::vector<Fq> v(static_cast<std::size_t>(degree) + 1);
  const unsigned r = field->r();
  for (int i = 0; i < degree; ++i) {
    v[i] = Fq{static_cast<std::uint8_t>(index % r)};
    index /= r;
  }
  v[degree] = Fq{1};
  return Poly(std::move(field), std::move(v));
}

bool Poly::is_one() const noexcept { return c_.size() == 1 && c_[0].code == 1; }

bool Poly::is_monic() const noexcept { return !c_.empty() && c_.back().code == 1; }

Fq Poly::coeff(int i) const noexcept {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Fq{0};
  return c_[i];
}

Fq Poly::leading() const noexcept { return c_.empty() ? Fq{0} : c_.back(); }

std::vector<unsigned> Poly::codes() const {
  std::vector<unsigned> out;
  out.reserve(c_.size());
  for (Fq c : c_) out.push_back(c.code);
  return out;
}

std::uint64_t Poly::lower_index() const noexcept {
  std::uint64_t idx = 0;
  const unsigned r = field_ ? field_->r() : 2;
  for (int i = degree() - 1; i >= 0; --i) idx = idx * r + c_[i].code;
  return idx;
}

void Poly::trim() noexcept {
  while (!c_.empty() && c_.back().code == 0) c_.pop_back();
}

void Poly::require_field() const {
  if (!field_) throw Error(Errc::invalid_argument, "polynomial without a coefficient field");
}

Poly& Poly::operator+=(const Poly& o) {
  if (!field_) field_ = o.field_;
  require_same_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!field_) field_ = o.field_;
  require_same_field(field_, o.field_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  FieldPtr f = a.field_ ? a.field_ : b.field_;
  if (a.c_.empty() || b.c_.empty()) return Poly(f);
  require_same_field(a.field_, b.field_);
  const FiniteField& F = *f;
  std::vector<Fq> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const Fq ai = a.c_[i];
    if (ai.code == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(ai, b.c_[j]));
    }
  }
  return Poly(std::move(f), std::move(out));
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (Fq& c : out.c_) c = field_->neg(c);
  return out;
}

Poly Poly::scaled(Fq c) const {
  if (c.code == 0) return Poly(field_);
  Poly out(*this);
  for (Fq& x : out.c_) x = field_->mul(x, c);
  return out;
}

Poly Poly::shifted(int k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<Fq> v(c_.size() + k);
  std::copy(c_.begin(), c_.end(), v.begin() + k);
  return Poly(field_, std::move(v));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::pow(std::uint64_t e) const {
  require_field();
  Poly result = constant(field_, Fq{1});
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::inflate(int s) const {
  if (c_.empty() || s == 1) return *this;
  std::vector<Fq> v(static_cast<std::size_t>(degree()) * s + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * s] = c_[i];
  return Poly(field_, std::move(v));
}

Poly Poly::compose(const Poly& g) const {
  Poly result(field_ ? field_ : g.field_);
  for (int i = degree(); i >= 0; --i) result = result * g + constant(result.field(), c_[i]);
  return result;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Fq> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = field_->mul(c_[i], field_->from_integer(static_cast<long long>(i)));
  }
  return Poly(field_, std::move(v));
}

Fq Poly::eval(Fq x) const noexcept {
  Fq acc{0};
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

std::string Poly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const unsigned c = c_[i].code;
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) noexcept {
  if (a.c_ != b.c_) return false;
  return a.c_.empty() || same_field(a.field_, b.field_);
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i].code <=> b.c_[i].code;
  }
  return std::strong_ordering::equal;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::zero_input, "polynomial division by zero");
  const FieldPtr& f = b.field();
  require_same_field(a.field() ? a.field() : f, f);
  const FiniteField& F = *f;
  if (a.degree() < b.degree()) return {Poly(f), a.field() ? a : Poly(f)};
  std::vector<Fq> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<Fq> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Fq lead_inv = F.inv(b.leading());
  const auto bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    const Fq c = rem[i];
    if (c.code == 0) continue;
    const Fq q = F.mul(c, lead_inv);
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(q, bc[j]));
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quot; }

Poly operator%(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::zero_input, "polynomial reduction modulo zero");
  if (a.degree() < b.degree()) return a.field() ? a : Poly(b.field());
  return divmod(a, b).rem;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
  const FieldPtr f = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, Fq{1}), s1(f);
  Poly t0(f), t1 = Poly::constant(f, Fq{1});
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    Poly s2 = s0 - qr.quot * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - qr.quot * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Fq li = f->inv(r0.leading());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) { return (a * b) % mod; }

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(mod.field(), Fq{1}) % mod;
  base = base % mod;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, mod);
    e >>= 1;
    if (e) base = mulmod(base, base, mod);
  }
  return result;
}

Poly invmod(const Poly& a, const Poly& mod) {
  XGcd g = xgcd(a % mod, mod);
  if (g.g.degree() != 0) {
    throw Error(Errc::not_a_unit_mod_v,
                a.to_string() + " is not invertible modulo " + mod.to_string());
  }
  return g.s % mod;
}

int valuation(Poly a, const Poly& prime) {
  if (a.is_zero()) throw Error(Errc::zero_input, "valuation of zero");
  int v = 0;
  for (;;) {
    DivMod qr = divmod(a, prime);
    if (!qr.rem.is_zero()) return v;
    a = std::move(qr.quot);
    ++v;
  }
}

CrtState crt_combine(const CrtState& acc, const Poly& a, const Poly& m) {
  if (acc.modulus.is_zero() || acc.modulus.degree() == 0) return {a % m, m};
  // x = acc.value + acc.modulus * k with k = (a - acc.value) / acc.modulus mod m
  const Poly inv = invmod(acc.modulus, m);
  const Poly k = mulmod(a - acc.value, inv, m);
  Poly modulus = acc.modulus * m;
  return {(acc.value + acc.modulus * k) % modulus, modulus};
}

}  // namespace drinfeld
