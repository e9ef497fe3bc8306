// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/goss_lseries/lfactors.hpp"

#include "drinfeld/base_arith/error.hpp"
#include <algorithm>
#include <map>

#include "drinfeld/base_arith/irreducible.hpp"
#include "drinfeld/goss_lseries/power_sums.hpp"

namespace drinfeld {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

LocalFactor rank1_factor(const RatFunc& beta, const Poly& f) {
  const FieldPtr& F = f.field();
  const int q = static_cast<int>(F->r()) - 1;
  const int v = beta.valuation_at(f);
  if (v % q != 0) return {f, {Poly::constant(F, Fq{1})}, Provenance::bad_prime_rule};
  const RatFunc twisted = beta * RatFunc(f).pow(-v);
  const Poly a = f.scaled(chi_beta(twisted, f));
  return {f, {Poly::constant(F, Fq{1}), -a}, Provenance::rank1_formula};
}

// Twice the largest T-degree per unit of deg f carried by the u-coefficients.
int growth_weight2(const LObject& obj) {
  return std::visit(Overloaded{[](const CarlitzObject&) { return 2; }, [](const TwistObject&) { return 2; },
                               [](const TauSheafRank1& s) { return 2 * s.t_degree(); },
                               [](const KDrinfeldModule& m) { return m.rank() == 1 ? 2 : 1; }},
                    obj);
}

bool is_rank1(const LObject& obj) {
  if (const auto* m = std::get_if<KDrinfeldModule>(&obj)) return m->rank() == 1;
  return true;
}

}  // namespace

const FieldPtr& object_field(const LObject& obj) {
  return std::visit(Overloaded{[](const CarlitzObject& c) -> const FieldPtr& { return c.field; },
                               [](const TwistObject& t) -> const FieldPtr& { return t.beta.field(); },
                               [](const TauSheafRank1& s) -> const FieldPtr& { return s.field(); },
                               [](const KDrinfeldModule& m) -> const FieldPtr& { return m.theta().field(); }},
                    obj);
}

std::string object_name(const LObject& obj) {
  return std::visit(
      Overloaded{[](const CarlitzObject&) { return std::string("carlitz"); },
                 [](const TwistObject& t) { return "cbeta:" + t.beta.to_string(); },
                 [](const TauSheafRank1& s) { return "sheaf:" + s.to_string(); },
                 [](const KDrinfeldModule& m) {
                   return "drinfeld:" + m.phi_T().to_string([](const RatFunc& c) { return c.to_string(); });
                 }},
      obj);
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::rank1_formula: return "rank1-formula";
    case Provenance::tau_sheaf_eigenvalue: return "tau-sheaf-eigenvalue";
    case Provenance::rank2_charpoly: return "rank2-charpoly";
    case Provenance::bad_prime_rule: return "bad-prime-rule";
  }
  return "unknown";
}

std::string LocalFactor::to_string() const {
  std::string s = "1";
  for (std::size_t k = 1; k < denominator.size(); ++k) {
    const Poly& c = denominator[k];
    if (c.is_zero()) continue;
    const std::string u = k == 1 ? "u" : "u^" + std::to_string(k);
    const std::string ct = coefficient_text(k == 1 ? -c : c);
    s += (k == 1 ? " - " : " + ") + (ct.empty() ? "" : ct + "*") + u;
  }
  return s;
}

LocalFactor local_factor(const LObject& obj, const Poly& f, const DeskBounds& bounds) {
  require_same_field(object_field(obj), f.field());
  if (!f.is_monic() || f.degree() < 1) throw Error(Errc::invalid_argument, "local factor needs a monic prime");
  const FieldPtr& F = f.field();
  const Poly one = Poly::constant(F, Fq{1});
  return std::visit(
      Overloaded{
          [&](const CarlitzObject&) { return LocalFactor{f, {one, -f}, Provenance::rank1_formula}; },
          [&](const TwistObject& t) { return rank1_factor(t.beta, f); },
          [&](const TauSheafRank1& s) {
            const auto j = sheaf_twist_at(s, f);
            if (!j) return LocalFactor{f, {one}, Provenance::bad_prime_rule};
            const Poly a = frobenius_eigenvalue(twist_by_prime(s, f, *j), f).value;
            return LocalFactor{f, {one, -a}, Provenance::tau_sheaf_eigenvalue};
          },
          [&](const KDrinfeldModule& m) {
            if (m.rank() == 1) return rank1_factor(m.phi_T().coeff(1), f);
            if (m.rank() != 2) throw Error(Errc::unsupported, "local factors only for rank <= 2");
            const FrobeniusCharpoly cp = frobenius_charpoly(m, f, bounds);
            return LocalFactor{f, cp.denominator(), Provenance::rank2_charpoly};
          }},
      obj);
}

EulerProduct euler_product(const LObject& obj, const SInfinityPoint& s, int d_max, int working_precision,
                           const DeskBounds& bounds) {
  const FieldPtr& F = object_field(obj);
  require_same_field(F, s.field());
  if (d_max < 0 || working_precision < 1) {
    throw Error(Errc::invalid_argument, "Euler product needs d_max >= 0 and precision >= 1");
  }
  const int N = working_precision;
  // Factors at degree d change the product from valuation d * gain2 / 2 on.
  const long long gain2 = -static_cast<long long>(growth_weight2(obj)) - 2LL * s.x.valuation();
  if (gain2 <= 0) {
    throw Error(Errc::non_convergent, "Euler product diverges at s = " + s.to_string() + ": v(x) = " +
                                          std::to_string(s.x.valuation()) + " does not exceed the weight of " +
                                          object_name(obj));
  }
  EulerProduct out;
  out.truncation_precision = static_cast<int>(((d_max + 1) * gain2 + 1) / 2);
  const SInfinityPoint minus_s = s.negated(N);
  const std::vector<Poly> primes = d_max == 0 ? std::vector<Poly>{} : monic_irreducibles(F, d_max, bounds);
  LaurentSeries product = LaurentSeries::one(F);
  std::map<Poly, Poly> a_f;
  for (const Poly& f : primes) {
    const LocalFactor lf = local_factor(obj, f, bounds);
    const LaurentSeries u = a_pow_s(f, minus_s, N);
    LaurentSeries denom = LaurentSeries::one(F);
    LaurentSeries uk = LaurentSeries::one(F);
    for (std::size_t k = 1; k < lf.denominator.size(); ++k) {
      uk = uk * u;
      if (lf.denominator[k].is_zero()) continue;
      denom = denom + LaurentSeries::from_poly(lf.denominator[k]) * uk;
    }
    const LaurentSeries tail = (denom - LaurentSeries::one(F)).truncated(N);
    if (!tail.is_zero() && tail.valuation() <= 0) {
      throw Error(Errc::non_convergent, "local factor at " + f.to_string() + " has valuation " +
                                            std::to_string(tail.valuation()) + " at s = " + s.to_string());
    }
    product = (product * denom.truncated(N).inverse(N)).truncated(N);
    a_f.emplace(f, lf.denominator.size() > 1 ? -lf.denominator[1] : Poly(F));
    ++out.primes_used;
  }
  out.product = product;
  if (is_rank1(obj)) {
    LaurentSeries sum = LaurentSeries::zero(F, N);
    for (int d = 0; d <= d_max; ++d) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) {
        count *= F->r();
        if (count > bounds.max_enumeration) {
          throw Error(Errc::bound_exceeded, "Dirichlet sum over degree " + std::to_string(d) +
                                                " exceeds max_enumeration=" + std::to_string(bounds.max_enumeration));
        }
      }
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Poly n = Poly::monic_from_index(F, d, idx);
        Poly a = Poly::constant(F, Fq{1});
        if (d > 0) {
          for (const auto& [f, e] : factor_monic(n, primes)) a *= a_f.at(f).pow(static_cast<std::uint64_t>(e));
        }
        if (a.is_zero()) continue;
        sum = sum + (LaurentSeries::from_poly(a) * a_pow_s(n, minus_s, N)).truncated(N);
      }
    }
    out.dirichlet = sum.truncated(N);
  }
  return out;
}

int TranslateReport::violations() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const TranslateRow& r) { return !r.ok; }));
}

TranslateReport translate_identity_check(const TauSheafRank1& sheaf, int i, const std::vector<Poly>& primes) {
  if (i < 0) throw Error(Errc::invalid_argument, "translation needs i >= 0");
  const TauSheafRank1 shifted = i == 0 ? sheaf : tensor(sheaf, carlitz_tensor_power(sheaf.field(), i).sheaf);
  TranslateReport report{i, {}};
  for (const Poly& f : primes) {
    if ((sheaf.den() % f).is_zero()) continue;
    TranslateRow row{f, frobenius_eigenvalue(shifted, f).value,
                     frobenius_eigenvalue(sheaf, f).value * f.pow(static_cast<std::uint64_t>(i)), false};
    row.ok = row.lhs == row.rhs;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace drinfeld
