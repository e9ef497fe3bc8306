// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/base_arith/field.hpp"

#include <charconv>
#include <sstream>

#include "drinfeld/base_arith/error.hpp"

namespace drinfeld {
namespace {

using PrimePoly = std::vector<unsigned>;  // over F_p, low to high

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly rem_prime(PrimePoly a, const PrimePoly& b, unsigned p) {
  // b monic
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

PrimePoly from_digits(unsigned index, unsigned p, unsigned len) {
  PrimePoly a(len);
  for (unsigned i = 0; i < len; ++i) {
    a[i] = index % p;
    index /= p;
  }
  return a;
}

bool irreducible_over_prime(const PrimePoly& f, unsigned p) {
  const unsigned n = static_cast<unsigned>(f.size()) - 1;
  for (unsigned d = 1; d <= n / 2; ++d) {
    unsigned count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned idx = 0; idx < count; ++idx) {
      PrimePoly g = from_digits(idx, p, d);
      g.push_back(1);
      if (rem_prime(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(unsigned long long n) noexcept {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteField::FiniteField(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), r_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m; ++i) r_ *= p;
  const std::size_t n = static_cast<std::size_t>(r_) * r_;
  add_.resize(n);
  mul_.resize(n);
  neg_.resize(r_);
  inv_.resize(r_);
  frob_.resize(r_);
  auto encode = [&](const PrimePoly& a) {
    unsigned code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return static_cast<std::uint8_t>(code);
  };
  for (unsigned a = 0; a < r_; ++a) {
    const PrimePoly da = from_digits(a, p, m);
    PrimePoly na(m);
    for (unsigned i = 0; i < m; ++i) na[i] = (p - da[i]) % p;
    neg_[a] = encode(na);
    for (unsigned b = 0; b < r_; ++b) {
      const PrimePoly db = from_digits(b, p, m);
      PrimePoly s(m);
      for (unsigned i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * r_ + b] = encode(s);
      PrimePoly prod(2 * m, 0);
      for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      }
      PrimePoly red = rem_prime(prod, modulus_, p);
      red.resize(m, 0);
      mul_[a * r_ + b] = encode(red);
    }
  }
  for (unsigned a = 1; a < r_; ++a) {
    for (unsigned b = 1; b < r_; ++b) {
      if (mul_[a * r_ + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
  for (unsigned a = 0; a < r_; ++a) {
    frob_[a] = pow(Fq{static_cast<std::uint8_t>(a)}, p).code;
  }
}

Fq FiniteField::element(unsigned code) const {
  if (code >= r_) {
    throw Error(Errc::invalid_argument,
                "element code " + std::to_string(code) + " outside F_" + std::to_string(r_));
  }
  return Fq{static_cast<std::uint8_t>(code)};
}

Fq FiniteField::from_integer(long long n) const noexcept {
  long long v = n % static_cast<long long>(p_);
  if (v < 0) v += p_;
  return Fq{static_cast<std::uint8_t>(v)};
}

Fq FiniteField::inv(Fq a) const {
  if (a.code == 0) throw Error(Errc::zero_input, "inverse of zero in F_" + std::to_string(r_));
  return {inv_[a.code]};
}

Fq FiniteField::pow(Fq a, std::uint64_t e) const noexcept {
  Fq result = one();
  Fq base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<unsigned> FiniteField::coords(Fq a) const { return from_digits(a.code, p_, m_); }

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "F_" << r_;
  if (m_ > 1) {
    os << " = F_" << p_ << "[y]/(";
    bool first = true;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (modulus_[i] != 1 || i == 0) os << modulus_[i];
      if (i >= 1) os << "y";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

FieldPtr field_make(unsigned p, unsigned m, const DeskBounds& bounds) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(Errc::invalid_argument, "extension degree m must be >= 1");
  unsigned long long r = 1;
  for (unsigned i = 0; i < m; ++i) {
    r *= p;
    if (r > bounds.max_field_order || r > 256) {
      throw Error(Errc::bound_exceeded, "field order " + std::to_string(p) + "^" +
                                            std::to_string(m) + " exceeds max_field_order=" +
                                            std::to_string(bounds.max_field_order));
    }
  }
  // Least monic irreducible of degree m: scan lower coefficients in index order.
  PrimePoly modulus;
  for (unsigned idx = 0; idx < r; ++idx) {
    PrimePoly f = from_digits(idx, p, m);
    f.push_back(1);
    if (irreducible_over_prime(f, p)) {
      modulus = std::move(f);
      break;
    }
  }
  return FieldPtr(new FiniteField(p, m, std::move(modulus)));
}

FieldPtr field_from_text(const std::string& text, const DeskBounds& bounds) {
  auto parse_uint = [&](std::string_view s) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(Errc::parse_error, "cannot read field order from '" + text + "'");
    }
    return v;
  };
  const auto caret = text.find('^');
  if (caret != std::string::npos) {
    return field_make(parse_uint(std::string_view(text).substr(0, caret)),
                      parse_uint(std::string_view(text).substr(caret + 1)), bounds);
  }
  const unsigned r = parse_uint(text);
  if (r < 2) throw Error(Errc::not_prime, "field order " + text + " is not a prime power");
  for (unsigned p = 2; p <= r; ++p) {
    if (r % p != 0) continue;
    unsigned m = 0;
    unsigned rest = r;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1) throw Error(Errc::not_prime, "field order " + text + " is not a prime power");
    return field_make(p, m, bounds);
  }
  throw Error(Errc::not_prime, "field order " + text + " is not a prime power");
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->p() == b->p() && a->m() == b->m();
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) {
    throw Error(Errc::domain_mismatch, "operands live over different constant fields");
  }
}

}  // namespace drinfeld
