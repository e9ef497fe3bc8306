// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/tau_rank1/tau_sheaf.hpp"

#include <algorithm>

namespace drinfeld {

TauSheafRank1::TauSheafRank1(std::vector<Poly> t_coeffs, Poly den) : num_(std::move(t_coeffs)), den_(std::move(den)) {
  normalize();
}

void TauSheafRank1::normalize() {
  while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
  if (num_.empty()) throw Error(Errc::zero_input, "tau-sheaf multiplier g must be nonzero");
  if (den_.is_zero()) throw Error(Errc::zero_input, "tau-sheaf denominator is zero");
  const Poly g = gcd(content(), den_);
  if (g.degree() > 0) {
    for (Poly& c : num_) c = c / g;
    den_ = den_ / g;
  }
  const Fq inv = den_.field()->inv(den_.leading());
  for (Poly& c : num_) c = c.scaled(inv);
  den_ = den_.scaled(inv);
}

TauSheafRank1 TauSheafRank1::unit(FieldPtr field) {
  return TauSheafRank1({Poly::constant(field, Fq{1})}, Poly::constant(field, Fq{1}));
}

TauSheafRank1 TauSheafRank1::from_ratfunc(const RatFunc& c) { return TauSheafRank1({c.num()}, c.den()); }

BiPoly TauSheafRank1::theta_major() const {
  const FieldPtr& F = field();
  int theta_deg = 0;
  for (const Poly& c : num_) theta_deg = std::max(theta_deg, c.degree());
  BiPoly out(theta_deg + 1, Poly(F));
  for (int j = 0; j <= t_degree(); ++j) {
    for (int i = 0; i <= num_[j].degree(); ++i) {
      out[i] += Poly::monomial(F, num_[j].coeff(i), j);
    }
  }
  return out;
}

Poly TauSheafRank1::content() const {
  Poly g(field());
  for (const Poly& c : num_) g = gcd(g, c);
  return g;
}

int TauSheafRank1::valuation_at(const Poly& f) const { return valuation(content(), f) - valuation(den_, f); }

TauSheafRank1 TauSheafRank1::scaled(const RatFunc& c) const {
  if (c.is_zero()) throw Error(Errc::zero_input, "scaling a tau-sheaf by zero");
  std::vector<Poly> num;
  for (const Poly& x : num_) num.push_back(x * c.num());
  return TauSheafRank1(std::move(num), den_ * c.den());
}

TauSheafRank1 TauSheafRank1::pow(int n) const {
  if (n < 0) throw Error(Errc::invalid_argument, "negative tensor power of a tau-sheaf");
  TauSheafRank1 acc = unit(field());
  for (int i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

TauSheafRank1 operator*(const TauSheafRank1& a, const TauSheafRank1& b) {
  require_same_field(a.field(), b.field());
  std::vector<Poly> num(a.num_.size() + b.num_.size() - 1, Poly(a.field()));
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    for (std::size_t j = 0; j < b.num_.size(); ++j) num[i + j] += a.num_[i] * b.num_[j];
  }
  return TauSheafRank1(std::move(num), a.den_ * b.den_);
}

std::string TauSheafRank1::to_string() const {
  std::string s;
  for (int j = t_degree(); j >= 0; --j) {
    const Poly& c = num_[j];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    const std::string cs = c.to_string("θ");
    const bool single = c.coeffs().size() == 1 || std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                                                [](Fq x) { return x.code != 0; }) == 1;
    if (j == 0) {
      s += cs;
    } else {
      if (!c.is_one()) s += single ? cs + "*" : "(" + cs + ")*";
      s += j == 1 ? "T" : "T^" + std::to_string(j);
    }
  }
  if (den_.is_one()) return s;
  return "(" + s + ")/(" + den_.to_string("θ") + ")";
}

TauSheafRank1 sheaf_of_drinfeld_rank1(const RatFunc& beta) {
  if (beta.is_zero()) throw Error(Errc::zero_input, "beta must be nonzero");
  const FieldPtr& F = beta.field();
  const Poly t_minus_theta_0 = -Poly::variable(F);  // coefficient of T^0 as a theta-polynomial
  TauSheafRank1 carlitz({t_minus_theta_0, Poly::constant(F, Fq{1})}, Poly::constant(F, Fq{1}));
  return carlitz.scaled(beta.inverse());
}

TauSheafRank1 carlitz_sheaf(const FieldPtr& field) { return sheaf_of_drinfeld_rank1(RatFunc::one(field)); }

TauSheafRank1 tensor(const TauSheafRank1& a, const TauSheafRank1& b) { return a * b; }

CarlitzTensorPower carlitz_tensor_power(const FieldPtr& field, int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "tensor power needs n >= 1, got " + std::to_string(n));
  CarlitzTensorPower out{carlitz_sheaf(field).pow(n), TModuleCarlitzPower::make(field, n)};
  if (n == 1) {
    const bool carlitz = out.t_module.d_psi == KMatrix{{RatFunc::theta(field)}} &&
                         out.t_module.v == KMatrix{{RatFunc::one(field)}} && out.sheaf == carlitz_sheaf(field);
    if (!carlitz) throw Error(Errc::unsupported, "C^{(x)1} does not reduce to the Carlitz module");
  }
  return out;
}

std::string GaloisCharacterValue::to_string() const {
  std::string s = value.to_string();
  if (modulus) s += " mod " + modulus->to_string();
  return s;
}

GaloisCharacterValue frobenius_eigenvalue(const TauSheafRank1& s, const Poly& f) {
  require_same_field(s.field(), f.field());
  if (!f.is_monic() || f.degree() < 1) throw Error(Errc::invalid_argument, "Frobenius prime must be monic nonconstant");
  if ((s.den() % f).is_zero()) {
    throw Error(Errc::bad_prime, "g has a pole at " + f.to_string() + ": " + s.to_string());
  }
  const Poly num = resultant(f, s.theta_major());
  const Fq den = resultant_constant(f, s.den());
  return {num.scaled(f.field()->inv(den)), f, std::nullopt};
}

GaloisCharacterValue frobenius_eigenvalue(const TauSheafRank1& s, const Poly& f, const Poly& v) {
  GaloisCharacterValue out = frobenius_eigenvalue(s, f);
  out.value = out.value % v;
  if (gcd(out.value, v).degree() > 0 || out.value.is_zero()) {
    throw Error(Errc::not_a_unit_mod_v, "g^f = " + frobenius_eigenvalue(s, f).value.to_string() +
                                            " is not a unit mod " + v.to_string());
  }
  out.modulus = v;
  return out;
}

std::optional<int> sheaf_twist_at(const TauSheafRank1& s, const Poly& f) {
  const int q = static_cast<int>(f.field()->r()) - 1;
  const int w = s.valuation_at(f);
  if (w % q != 0) return std::nullopt;
  return -w / q;
}

TauSheafRank1 twist_by_prime(const TauSheafRank1& s, const Poly& f, int j) {
  const long long q = static_cast<long long>(f.field()->r()) - 1;
  return s.scaled(RatFunc(f).pow(q * j));
}

Fq chi_beta(const RatFunc& beta, const Poly& f) {
  if (beta.is_zero()) throw Error(Errc::zero_input, "beta must be nonzero");
  require_same_field(beta.field(), f.field());
  if (beta.valuation_at(f) != 0) {
    throw Error(Errc::bad_prime, "beta = " + beta.to_string() + " has a zero or pole at " + f.to_string());
  }
  const FieldPtr& F = f.field();
  return F->div(resultant_constant(f, beta.den()), resultant_constant(f, beta.num()));
}

GaloisCharacterValue chi_beta_value(const RatFunc& beta, const Poly& f) {
  return {Poly::constant(f.field(), chi_beta(beta, f)), f, std::nullopt};
}

ClassITest class_I_test(const RatFunc& beta, int precision) {
  auto root = root_pow_r_minus_1(beta, precision);
  if (auto* alpha = std::get_if<LaurentSeries>(&root)) return ClassI{std::move(*alpha)};
  return NotClassI{std::get<NotAPower>(root).reason};
}

}  // namespace drinfeld
