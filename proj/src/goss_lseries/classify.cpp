// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/goss_lseries/classify.hpp"

#include "drinfeld/base_arith/error.hpp"
#include <set>

namespace drinfeld {

void EigenSystem::add(const Poly& prime, const RatFunc& value) {
  if (!prime.is_monic() || prime.degree() < 1) {
    throw Error(Errc::invalid_argument, "eigen-system index " + prime.to_string() + " is not a monic prime");
  }
  if (value.is_zero()) throw Error(Errc::zero_input, "eigenvalue at " + prime.to_string() + " is zero");
  if (!field) field = prime.field();
  require_same_field(field, prime.field());
  values.insert_or_assign(prime, value);
}

namespace {

std::optional<ConductorEvidence> find_conductor(const FieldPtr& F, const std::map<Poly, Fq>& chars) {
  for (int deg = 1; deg <= 2; ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= F->r();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const Poly m = Poly::monic_from_index(F, deg, idx);
      for (unsigned c = 1; c < F->r(); ++c) {
        const Fq c0{static_cast<std::uint8_t>(c)};
        std::map<Poly, Fq> by_residue;
        bool ok = true;
        int used = 0;
        for (const auto& [P, cp] : chars) {
          if ((P % m).is_zero()) continue;
          const Fq value = F->mul(cp, F->inv(F->pow(c0, static_cast<std::uint64_t>(P.degree()))));
          auto [it, inserted] = by_residue.emplace(P % m, value);
          if (!inserted && it->second != value) {
            ok = false;
            break;
          }
          ++used;
        }
        if (ok && used > 0) {
          std::string note = "values depend only on f mod " + m.to_string();
          if (c0.code != 1) note += " after removing the degree character " + std::to_string(c0.code) + "^deg";
          return ConductorEvidence{m, c0, std::move(by_residue), std::move(note)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Classification classify_eigen_system(const EigenSystem& es) {
  std::set<int> degrees;
  for (const auto& [P, a] : es.values) degrees.insert(P.degree());
  if (degrees.size() < 2) {
    throw Error(Errc::insufficient_data, "eigen-system covers " + std::to_string(degrees.size()) +
                                             " prime degree(s); at least 2 are needed");
  }
  const FieldPtr& F = es.field;
  // deg alpha_P = j deg P fixes j.
  std::optional<long long> j;
  for (const auto& [P, a] : es.values) {
    const long long da = static_cast<long long>(a.num().degree()) - a.den().degree();
    if (da % P.degree() != 0) {
      return NoMatch{"deg alpha at " + P.to_string() + " is " + std::to_string(da) + ", not a multiple of deg P"};
    }
    const long long jp = da / P.degree();
    if (j && *j != jp) {
      return NoMatch{"degree ratio " + std::to_string(jp) + " at " + P.to_string() + " differs from " +
                     std::to_string(*j)};
    }
    j = jp;
  }
  std::map<Poly, Fq> chars;
  for (const auto& [P, a] : es.values) {
    const RatFunc c = a / RatFunc(P).pow(*j);
    if (!c.is_constant()) {
      return NoMatch{"alpha_P / P^" + std::to_string(*j) + " at " + P.to_string() + " is " + c.to_string("T") +
                     ", not a constant"};
    }
    chars.emplace(P, c.num().coeff(0));
  }
  const long long q = static_cast<long long>(F->r()) - 1;
  // c_P = c^{deg P}: an unramified character, read as a plain translate.
  for (unsigned cc = 1; cc < F->r(); ++cc) {
    const Fq c{static_cast<std::uint8_t>(cc)};
    bool all = true;
    for (const auto& [P, cp] : chars) all = all && cp == F->pow(c, static_cast<std::uint64_t>(P.degree()));
    if (all) return ClassIITranslate{*j, c, ((*j % q) + q) % q};
  }
  ClassIWitness w{*j, chars, find_conductor(F, chars)};
  return w;
}

std::string verdict_name(const Classification& c) {
  if (std::holds_alternative<ClassIWitness>(c)) return "ClassIWitness";
  if (std::holds_alternative<ClassIITranslate>(c)) return "ClassIITranslate";
  return "NoMatch";
}

}  // namespace drinfeld
