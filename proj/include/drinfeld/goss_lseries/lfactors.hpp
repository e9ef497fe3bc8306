// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "drinfeld/goss_lseries/s_infinity.hpp"
#include "drinfeld/ore_drinfeld/torsion.hpp"
#include "drinfeld/tau_rank1/tau_sheaf.hpp"

namespace drinfeld {

struct CarlitzObject {
  FieldPtr field;
};
struct TwistObject {
  RatFunc beta;  // C^{(beta)}
};
using LObject = std::variant<CarlitzObject, TwistObject, TauSheafRank1, KDrinfeldModule>;

const FieldPtr& object_field(const LObject& obj);
std::string object_name(const LObject& obj);

enum class Provenance { rank1_formula, tau_sheaf_eigenvalue, rank2_charpoly, bad_prime_rule };
std::string provenance_name(Provenance p);

// Inverse local factor: denominator[k] is the coefficient of u^k.
struct LocalFactor {
  Poly prime;
  std::vector<Poly> denominator;
  Provenance provenance = Provenance::rank1_formula;

  // e.g. "1", "1 - T*u", "1 - (T+1)*u + T^2*u^2"
  std::string to_string() const;
};

// Throws Unsupported for a rank-2 module at a bad prime.
LocalFactor local_factor(const LObject& obj, const Poly& f, const DeskBounds& bounds = {});

struct EulerProduct {
  LaurentSeries product;                  // over monic primes of degree <= d_max
  std::optional<LaurentSeries> dirichlet; // sum over monic n of degree <= d_max (rank 1)
  int truncation_precision = 0;           // both equal the full L-value below this exponent
  int primes_used = 0;
};

// Throws NonConvergent when the factors at degree d do not gain valuation
// with d under the supplied s.
EulerProduct euler_product(const LObject& obj, const SInfinityPoint& s, int d_max, int working_precision,
                           const DeskBounds& bounds = {});

struct TranslateRow {
  Poly prime;
  Poly lhs;  // eigenvalue of F (x) C^{(x)i}
  Poly rhs;  // eigenvalue of F times f^i
  bool ok = false;
};
struct TranslateReport {
  int i = 0;
  std::vector<TranslateRow> rows;
  int violations() const;
};
TranslateReport translate_identity_check(const TauSheafRank1& sheaf, int i, const std::vector<Poly>& primes);

}  // namespace drinfeld
