// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "drinfeld/base_arith/laurent.hpp"
#include "drinfeld/base_arith/resultant.hpp"
#include "drinfeld/ore_drinfeld/exp.hpp"

namespace drinfeld {

// Rank-1 tau-sheaf over k[T] with tau(h) = g * frobenius(h), g in F_r(theta)[T].
// g = (sum_j c_j(theta) T^j) / den(theta), in lowest terms, den monic.
class TauSheafRank1 {
 public:
  TauSheafRank1() = default;
  // Entry j of t_coeffs is the theta-polynomial multiplying T^j.
  TauSheafRank1(std::vector<Poly> t_coeffs, Poly den);

  static TauSheafRank1 unit(FieldPtr field);
  static TauSheafRank1 from_ratfunc(const RatFunc& c);

  const FieldPtr& field() const noexcept { return den_.field(); }
  const std::vector<Poly>& t_coeffs() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  int t_degree() const noexcept { return static_cast<int>(num_.size()) - 1; }
  // Numerator regrouped by powers of theta, as resultant() expects.
  BiPoly theta_major() const;
  // gcd over F_r[theta] of the numerator coefficients.
  Poly content() const;
  // v_f(content) - v_f(den).
  int valuation_at(const Poly& f) const;

  TauSheafRank1 scaled(const RatFunc& c) const;
  TauSheafRank1 pow(int n) const;
  friend TauSheafRank1 operator*(const TauSheafRank1& a, const TauSheafRank1& b);
  friend bool operator==(const TauSheafRank1& a, const TauSheafRank1& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // e.g. "(T-θ)", "(θ+1)/θ*T + 2", "((2θ)T+1)/(θ^2+1)"
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Poly> num_;
  Poly den_;
};

// (1/beta)(T - theta); beta = 1 is the Carlitz sheaf.
TauSheafRank1 sheaf_of_drinfeld_rank1(const RatFunc& beta);
TauSheafRank1 carlitz_sheaf(const FieldPtr& field);
TauSheafRank1 tensor(const TauSheafRank1& a, const TauSheafRank1& b);

struct CarlitzTensorPower {
  TauSheafRank1 sheaf;
  TModuleCarlitzPower t_module;
};
CarlitzTensorPower carlitz_tensor_power(const FieldPtr& field, int n);

struct GaloisCharacterValue {
  Poly value;                    // in F_r[T], or a constant for chi_beta
  Poly prime;                    // Frobenius prime f
  std::optional<Poly> modulus;   // v, when reduced into (A/v)^*
  std::string to_string() const;
};

// g^f(T) = Res(f, numerator) / Res(f, den). Throws BadPrime when f | den.
GaloisCharacterValue frobenius_eigenvalue(const TauSheafRank1& s, const Poly& f);
// The same reduced mod v; throws NotAUnitModV when v | g^f.
GaloisCharacterValue frobenius_eigenvalue(const TauSheafRank1& s, const Poly& f, const Poly& v);

// j with s * f^{(r-1) j} integral and of valuation 0 at f, or nullopt when no
// such twist exists (bad reduction).
std::optional<int> sheaf_twist_at(const TauSheafRank1& s, const Poly& f);
TauSheafRank1 twist_by_prime(const TauSheafRank1& s, const Poly& f, int j);

// prod_i beta(theta_i)^{-1} over the roots of f, in F_r^*. Throws BadPrime
// when beta has a zero or pole at f.
Fq chi_beta(const RatFunc& beta, const Poly& f);
GaloisCharacterValue chi_beta_value(const RatFunc& beta, const Poly& f);

struct ClassI {
  LaurentSeries alpha;  // alpha^{r-1} = beta to the requested precision
};
struct NotClassI {
  std::string obstruction;
};
using ClassITest = std::variant<ClassI, NotClassI>;
ClassITest class_I_test(const RatFunc& beta, int precision);

}  // namespace drinfeld
