// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/base_arith/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "drinfeld/base_arith/error.hpp"

namespace drinfeld {
namespace {

constexpr int kExact = LaurentSeries::kExact;

int sat_add(long long a, long long b) {
  if (a == kExact || b == kExact) return kExact;
  const long long s = a + b;
  if (s >= kExact) return kExact - 1;
  if (s <= -kExact) return -kExact + 1;
  return static_cast<int>(s);
}

int sat_mul(long long a, long long b) {
  if (a == kExact) return kExact;
  const long long s = a * b;
  if (s >= kExact) return kExact - 1;
  return static_cast<int>(s);
}

long long ipow(long long base, int e) {
  long long out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > (1LL << 40)) return 1LL << 41;
    out *= base;
  }
  return out;
}

}  // namespace

LaurentSeries::LaurentSeries(FieldPtr field, int valuation, std::vector<Fq> coeffs, int precision)
    : field_(std::move(field)), valuation_(valuation), coeffs_(std::move(coeffs)), precision_(precision) {
  normalize();
}

void LaurentSeries::normalize() {
  if (precision_ != kExact && valuation_ < precision_) {
    const long long keep = static_cast<long long>(precision_) - valuation_;
    if (static_cast<long long>(coeffs_.size()) > keep) coeffs_.resize(keep);
  } else if (precision_ != kExact) {
    coeffs_.clear();
  }
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].code == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    valuation_ = precision_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    valuation_ += static_cast<int>(lead);
  }
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

LaurentSeries LaurentSeries::zero(FieldPtr field, int precision) {
  return LaurentSeries(std::move(field), precision, {}, precision);
}

LaurentSeries LaurentSeries::one(FieldPtr field) { return monomial(std::move(field), Fq{1}, 0); }

LaurentSeries LaurentSeries::monomial(FieldPtr field, Fq c, int exponent) {
  return LaurentSeries(std::move(field), exponent, {c}, kExact);
}

LaurentSeries LaurentSeries::from_poly(const Poly& p) {
  if (p.is_zero()) return zero(p.field());
  std::vector<Fq> c(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentSeries(p.field(), -p.degree(), std::move(c), kExact);
}

LaurentSeries LaurentSeries::from_ratfunc(const RatFunc& x, int relative_precision) {
  if (x.is_polynomial()) return from_poly(x.num());
  return from_poly(x.num()) * from_poly(x.den()).inverse(relative_precision);
}

int LaurentSeries::relative_precision() const noexcept {
  if (precision_ == kExact) return kExact;
  return precision_ - valuation_;
}

Fq LaurentSeries::coeff(int exponent) const {
  if (exponent >= precision_) {
    throw Error(Errc::invalid_argument, "coefficient of t^" + std::to_string(exponent) +
                                            " beyond precision " + std::to_string(precision_));
  }
  const long long idx = static_cast<long long>(exponent) - valuation_;
  if (idx < 0 || idx >= static_cast<long long>(coeffs_.size())) return Fq{0};
  return coeffs_[idx];
}

Fq LaurentSeries::leading() const noexcept { return coeffs_.empty() ? Fq{0} : coeffs_.front(); }

bool LaurentSeries::is_one_unit() const noexcept {
  return !coeffs_.empty() && valuation_ == 0 && coeffs_.front().code == 1;
}

LaurentSeries LaurentSeries::truncated(int precision) const {
  return LaurentSeries(field_, valuation_, coeffs_, std::min(precision, precision_));
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out(*this);
  for (Fq& c : out.coeffs_) c = field_->neg(c);
  return out;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const FieldPtr field = a.field_ ? a.field_ : b.field_;
  require_same_field(field, b.field_ ? b.field_ : field);
  const int prec = std::min(a.precision_, b.precision_);
  if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(field, prec);
  long long lo = std::min(a.is_zero() ? (long long)kExact : a.valuation_,
                          b.is_zero() ? (long long)kExact : b.valuation_);
  long long hi = std::max(a.valuation_ + static_cast<long long>(a.coeffs_.size()),
                          b.valuation_ + static_cast<long long>(b.coeffs_.size()));
  if (a.is_zero()) hi = b.valuation_ + static_cast<long long>(b.coeffs_.size());
  if (b.is_zero()) hi = a.valuation_ + static_cast<long long>(a.coeffs_.size());
  hi = std::min<long long>(hi, prec);
  if (hi <= lo) return LaurentSeries::zero(field, prec);
  std::vector<Fq> c(static_cast<std::size_t>(hi - lo));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const long long e = a.valuation_ + static_cast<long long>(i);
    if (e < hi) c[e - lo] = a.coeffs_[i];
  }
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    const long long e = b.valuation_ + static_cast<long long>(i);
    if (e < hi) c[e - lo] = field->add(c[e - lo], b.coeffs_[i]);
  }
  return LaurentSeries(field, static_cast<int>(lo), std::move(c), prec);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const FieldPtr field = a.field_ ? a.field_ : b.field_;
  require_same_field(field, b.field_ ? b.field_ : field);
  if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return LaurentSeries::zero(field);
  const int prec = std::min(sat_add(a.valuation_, b.precision_), sat_add(b.valuation_, a.precision_));
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(field, prec);
  const long long v = static_cast<long long>(a.valuation_) + b.valuation_;
  long long len = static_cast<long long>(a.coeffs_.size() + b.coeffs_.size()) - 1;
  if (prec != kExact) len = std::min(len, prec - v);
  if (len <= 0) return LaurentSeries::zero(field, prec);
  std::vector<Fq> c(static_cast<std::size_t>(len));
  const FiniteField& F = *field;
  for (std::size_t i = 0; i < a.coeffs_.size() && static_cast<long long>(i) < len; ++i) {
    const Fq ai = a.coeffs_[i];
    if (ai.code == 0) continue;
    const std::size_t jmax = std::min<std::size_t>(b.coeffs_.size(), static_cast<std::size_t>(len - i));
    for (std::size_t j = 0; j < jmax; ++j) c[i + j] = F.add(c[i + j], F.mul(ai, b.coeffs_[j]));
  }
  return LaurentSeries(field, static_cast<int>(v), std::move(c), prec);
}

LaurentSeries LaurentSeries::scaled(Fq c) const {
  if (c.code == 0) return zero(field_, precision_);
  LaurentSeries out(*this);
  for (Fq& x : out.coeffs_) x = field_->mul(x, c);
  return out;
}

LaurentSeries LaurentSeries::inverse(int relative_precision) const {
  if (is_zero()) throw Error(Errc::zero_input, "inverse of a zero Laurent series");
  const FiniteField& F = *field_;
  const Fq a0_inv = F.inv(coeffs_.front());
  if (is_exact() && coeffs_.size() == 1) return monomial(field_, a0_inv, -valuation_);
  const int n = std::min(relative_precision, this->relative_precision());
  if (n <= 0) throw Error(Errc::invalid_argument, "inverse needs positive precision");
  std::vector<Fq> b(n);
  b[0] = a0_inv;
  for (int k = 1; k < n; ++k) {
    Fq acc{0};
    const int imax = std::min<int>(k, static_cast<int>(coeffs_.size()) - 1);
    for (int i = 1; i <= imax; ++i) acc = F.add(acc, F.mul(coeffs_[i], b[k - i]));
    b[k] = F.neg(F.mul(acc, a0_inv));
  }
  return LaurentSeries(field_, -valuation_, std::move(b), -valuation_ + n);
}

LaurentSeries LaurentSeries::pow(long long e, int relative_precision) const {
  if (e < 0) return inverse(relative_precision).pow(-e, relative_precision);
  LaurentSeries result = one(field_);
  LaurentSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

LaurentSeries LaurentSeries::frobenius_power(int j) const {
  if (j == 0 || is_zero()) return *this;
  const FiniteField& F = *field_;
  long long step = 1;
  for (int i = 0; i < j; ++i) step *= F.p();
  std::vector<Fq> c((coeffs_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Fq x = coeffs_[i];
    for (int k = 0; k < j; ++k) x = F.frobenius(x);
    c[i * step] = x;
  }
  return LaurentSeries(field_, sat_mul(valuation_, step), std::move(c), sat_mul(precision_, step));
}

int LaurentSeries::agreement(const LaurentSeries& o) const {
  const int cap = std::min(precision_, o.precision_);
  long long lo = std::min(valuation_, o.valuation_);
  long long hi = std::max(valuation_ + static_cast<long long>(coeffs_.size()),
                          o.valuation_ + static_cast<long long>(o.coeffs_.size()));
  if (is_zero()) lo = o.valuation_;
  if (o.is_zero()) lo = valuation_;
  if (is_zero() && o.is_zero()) return cap;
  hi = std::min<long long>(hi, cap);
  for (long long e = lo; e < hi; ++e) {
    if (coeff(static_cast<int>(e)) != o.coeff(static_cast<int>(e))) return static_cast<int>(e);
  }
  return cap;
}

std::string LaurentSeries::to_string(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    const unsigned c = coeffs_[i].code;
    if (c == 0) continue;
    const int e = valuation_ + static_cast<int>(i);
    if (shown > 0) os << " + ";
    ++shown;
    if (e == 0) {
      os << c;
    } else if (e < 0) {
      if (c != 1) os << c;
      os << "θ";
      if (e < -1) os << "^" << -e;
    } else {
      os << c << "/θ";
      if (e > 1) os << "^" << e;
    }
  }
  const bool truncated_terms = shown == max_terms && coeffs_.size() > static_cast<std::size_t>(max_terms);
  if (shown == 0) os << "0";
  if (!is_exact()) {
    os << " + O(1/θ^" << precision_ << ")";
  } else if (truncated_terms) {
    os << " + ...";
  }
  return os.str();
}

std::uint64_t PAdicInt::residue(unsigned p, int L) const {
  if (digits && L > *digits) {
    throw Error(Errc::invalid_argument, "p-adic exponent known only to " + std::to_string(*digits) +
                                            " digits, " + std::to_string(L) + " requested");
  }
  const long long mod = ipow(p, L);
  long long v = value % mod;
  if (v < 0) v += mod;
  return static_cast<std::uint64_t>(v);
}

PAdicInt operator+(const PAdicInt& a, const PAdicInt& b) {
  PAdicInt out{a.value + b.value, std::nullopt};
  if (a.digits && b.digits) {
    out.digits = std::min(*a.digits, *b.digits);
  } else if (a.digits) {
    out.digits = a.digits;
  } else if (b.digits) {
    out.digits = b.digits;
  }
  return out;
}

LaurentSeries one_unit_pow(const LaurentSeries& u, const PAdicInt& y, int working_precision) {
  if (!u.is_one_unit()) throw Error(Errc::not_one_unit, "base " + u.to_string(6) + " is not a 1-unit");
  const FieldPtr& field = u.field();
  const unsigned p = field->p();
  const bool exact = u.is_exact() && y.is_exact() && y.value >= 0;
  std::uint64_t exponent = 0;
  int prec = kExact;
  if (exact) {
    exponent = static_cast<std::uint64_t>(y.value);
  } else {
    prec = std::min(u.precision(), working_precision);
    if (y.digits) prec = static_cast<int>(std::min<long long>(prec, ipow(p, *y.digits)));
    int L = 0;
    while (ipow(p, L) < prec) ++L;
    exponent = y.residue(p, L);
  }
  LaurentSeries result = LaurentSeries::one(field);
  const LaurentSeries base = exact ? u : u.truncated(prec);
  for (int j = 0; exponent > 0; ++j, exponent /= p) {
    const unsigned digit = static_cast<unsigned>(exponent % p);
    if (digit == 0) continue;
    LaurentSeries uj = base.frobenius_power(j);
    if (!exact) uj = uj.truncated(prec);
    for (unsigned k = 0; k < digit; ++k) result = result * uj;
  }
  if (!exact) result = result.truncated(prec);
  return result;
}

std::variant<LaurentSeries, NotAPower> root_pow_r_minus_1(const RatFunc& beta, int precision) {
  if (beta.is_zero()) throw Error(Errc::zero_input, "root of zero");
  if (precision < 1) throw Error(Errc::invalid_argument, "precision must be >= 1");
  const FieldPtr& field = beta.field();
  const int q = static_cast<int>(field->r()) - 1;
  const int v = beta.infinite_valuation();
  if (v % q != 0) {
    return NotAPower{"valuation obstruction: v_inf(beta) = " + std::to_string(v) +
                     " is not divisible by r-1 = " + std::to_string(q)};
  }
  const Fq lead = field->div(beta.num().leading(), beta.den().leading());
  if (lead.code != 1) {
    return NotAPower{"leading coefficient obstruction: " + std::to_string(lead.code) +
                     " is not an (r-1)-st power in F_r^*"};
  }
  const LaurentSeries expansion = LaurentSeries::from_ratfunc(beta, precision).truncated(v + precision);
  const LaurentSeries w = expansion * LaurentSeries::theta_power(field, v);
  // Inverse of r-1 in Z_p, modulo p^L with p^L >= precision.
  const unsigned p = field->p();
  int L = 1;
  while (ipow(p, L) < precision) ++L;
  const long long mod = ipow(p, L);
  long long inv = 1;
  for (long long c = 1; c < mod; ++c) {
    if ((c * q) % mod == 1) {
      inv = c;
      break;
    }
  }
  const LaurentSeries unit = one_unit_pow(w, PAdicInt::truncated(inv, L), precision);
  return LaurentSeries::theta_power(field, -v / q) * unit;
}

}  // namespace drinfeld
