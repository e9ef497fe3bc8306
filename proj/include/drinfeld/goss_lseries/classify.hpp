// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "drinfeld/base_arith/ratfunc.hpp"

namespace drinfeld {

// Eigenvalues at monic primes; values are elements of F_r(T), written with
// the RatFunc type.
struct EigenSystem {
  FieldPtr field;
  std::map<Poly, RatFunc> values;
  std::map<std::string, std::string> tags;

  void add(const Poly& prime, const RatFunc& value);
};

// alpha_P = c^{deg P} P^j; scale c = 1 is the plain translate by j.
struct ClassIITranslate {
  long long j = 0;
  Fq scale{1};
  long long j_mod_r_minus_1 = 0;
};

// A modulus m and unramified scale c0 such that c_P c0^{-deg P} depends only
// on P mod m (primes dividing m excluded).
struct ConductorEvidence {
  Poly modulus;
  Fq scale{1};
  std::map<Poly, Fq> values_by_residue;
  std::string note;
};

struct ClassIWitness {
  long long j = 0;
  std::map<Poly, Fq> characters;  // P -> c_P = alpha_P / P^j
  std::optional<ConductorEvidence> conductor;
};

struct NoMatch {
  std::string reason;
};

using Classification = std::variant<ClassIWitness, ClassIITranslate, NoMatch>;

// Throws InsufficientData when fewer than two prime degrees are present.
Classification classify_eigen_system(const EigenSystem& es);
std::string verdict_name(const Classification& c);

}  // namespace drinfeld
