#include <cmath>

#include "doctest.h"
#include "drinfeld/base_arith/expr.hpp"
#include "drinfeld/base_arith/irreducible.hpp"
#include "drinfeld/goss_lseries/classify.hpp"
#include "drinfeld/goss_lseries/lfactors.hpp"
#include "drinfeld/goss_lseries/newton.hpp"
#include "drinfeld/goss_lseries/power_sums.hpp"

using namespace drinfeld;

namespace {

RatFunc R(const FieldPtr& F, const char* s) { return parse_ratfunc(F, s); }
Poly P(const FieldPtr& F, const char* s) { return parse_poly(F, s); }

// sum_e c_e x^{-e} at x = theta^m, as a series in 1/theta.
LaurentSeries evaluate_special(const SpecialPolynomial& sp, int m) {
  const FieldPtr& F = sp.coeffs[0].field();
  LaurentSeries acc = LaurentSeries::zero(F);
  for (int e = 0; e <= sp.degree(); ++e) {
    acc = acc + LaurentSeries::from_poly(sp.coeffs[e]) * LaurentSeries::theta_power(F, -m * e);
  }
  return acc;
}

}  // namespace

TEST_CASE("power sums: examples, vanishing and the exact table") {
  auto F3 = field_make(3, 1);
  CHECK(power_sum(F3, 0, 7) == P(F3, "1"));
  CHECK(power_sum(F3, 1, 1).is_zero());
  CHECK(power_sum(F3, 2, 0).is_zero());
  CHECK(power_sum(F3, 1, 2) == P(F3, "-1"));
  CHECK(digit_weight(3, 8) == 4);
  CHECK(power_sum_degree_bound(*F3, 8) == 2);
  for (unsigned r : {2u, 3u, 4u}) {
    auto F = field_from_text(std::to_string(r));
    const int k_max = r == 4 ? 40 : 60;
    PowerSumTable table(F, k_max);
    for (int e = 0; e <= (r == 2 ? 6 : 4); ++e) {
      const std::vector<Poly> sums = power_sums_enumerated(F, e, k_max);
      for (int k = 0; k <= k_max; ++k) {
        CHECK(table.power_sum(e, k) == sums[k]);
        if (power_sum_vanishes(*F, e, k)) CHECK(sums[k].is_zero());
        if (k <= 12 && e <= 3) CHECK(power_sum(F, e, k) == sums[k]);
      }
    }
  }
  DeskBounds tiny;
  tiny.max_enumeration = 8;
  CHECK_THROWS_AS(power_sum(F3, 2, 20, tiny), Error);
}

TEST_CASE("special polynomials") {
  auto F2 = field_make(2, 1);
  auto F3 = field_make(3, 1);
  CHECK(special_polynomial(F3, 0, SpecialKind::zeta).to_string() == "1");
  CHECK(special_polynomial(F2, 0, SpecialKind::zeta).to_string() == "1");
  CHECK(special_polynomial(F2, 0, SpecialKind::carlitz).to_string() == "1 + x^-1");
  CHECK(special_polynomial(F3, 1, SpecialKind::carlitz).to_string() == "1 + 2*x^-1");
  CHECK_THROWS_AS(special_polynomial(F3, -1, SpecialKind::zeta), Error);
  CHECK(parse_kind("carlitz") == SpecialKind::carlitz);
  CHECK_THROWS_AS(parse_kind("eta"), Error);
  for (const FieldPtr& F : {F2, F3}) {
    const int q = static_cast<int>(F->r()) - 1;
    PowerSumTable table(F, 81);
    const auto zeta = special_polynomials_enumerated(F, 80, SpecialKind::zeta, 729);
    const auto carl = special_polynomials_enumerated(F, 79, SpecialKind::carlitz, 729);
    for (int i = 0; i <= 79; ++i) {
      const auto z = special_polynomial(table, i, SpecialKind::zeta);
      const auto c = special_polynomial(table, i, SpecialKind::carlitz);
      CHECK(z.coeffs == zeta[i].coeffs);
      CHECK(c.coeffs == carl[i].coeffs);
      CHECK(c.coeffs == special_polynomial(table, i + 1, SpecialKind::zeta).coeffs);
      CHECK(z.degree() <= i / q);
    }
  }
}

TEST_CASE("degree scan agrees with the exact degrees") {
  for (unsigned r : {2u, 3u}) {
    auto F = field_from_text(std::to_string(r));
    for (SpecialKind kind : {SpecialKind::zeta, SpecialKind::carlitz}) {
      const auto scan = special_degrees(F, 120, kind);
      PowerSumTable table(F, 121);
      REQUIRE(scan.degrees.size() == 121);
      for (int i = 0; i <= 120; ++i) CHECK(scan.degrees[i] == special_polynomial(table, i, kind).degree());
      CHECK(scan.points_used >= 1);
    }
  }
}

TEST_CASE("Newton polygons") {
  auto F2 = field_make(2, 1);
  auto F3 = field_make(3, 1);
  const auto np = newton_polygon(special_polynomial(F2, 0, SpecialKind::carlitz));
  REQUIRE(np.size() == 1);
  CHECK(np[0].slope == Slope{0, 1});
  CHECK(np[0].length == 1);
  CHECK(newton_polygon(special_polynomial(F3, 0, SpecialKind::zeta)).empty());
  CHECK(newton_polygon(std::vector<Poly>{P(F3, "T"), P(F3, "1")}).size() == 1);
  // Points (0,0), (1,-3), (2,-4), (3,-9): hull (0,0)-(1,-3)-(3,-9) with a length-2 segment.
  const auto hull = newton_polygon(std::vector<Poly>{P(F3, "1"), P(F3, "T^3"), P(F3, "T^4"), P(F3, "T^9")});
  REQUIRE(hull.size() == 1);
  CHECK(hull[0].slope == Slope{-3, 1});
  CHECK(hull[0].length == 3);
  const auto bent = newton_polygon(std::vector<Poly>{P(F3, "1"), P(F3, "T^5"), P(F3, "T^6")});
  REQUIRE(bent.size() == 2);
  CHECK(bent[0].slope == Slope{-5, 1});
  CHECK(bent[1].slope == Slope{-1, 1});
  CHECK(has_simple_slopes(bent));
  CHECK_FALSE(has_simple_slopes(hull));
  CHECK(has_simple_slopes(newton_polygon(std::vector<Poly>{P(F3, "1"), P(F3, "T^2"), P(F3, "T^3")})));
  CHECK(newton_polygon(std::vector<Poly>{P(F3, "1"), P(F3, "0"), P(F3, "T")})[0].slope == Slope{-1, 2});
  for (const FieldPtr& F : {F2, F3}) {
    PowerSumTable table(F, 40);
    for (int i = 0; i <= 40; ++i) CHECK(has_simple_slopes(newton_polygon(special_polynomial(table, i, SpecialKind::zeta))));
  }
}

TEST_CASE("a^s on the exponent space") {
  auto F3 = field_make(3, 1);
  const SInfinityPoint s{LaurentSeries::from_ratfunc(R(F3, "θ^2+1"), 20), PAdicInt::exact(5)};
  CHECK(a_pow_s(P(F3, "1"), s, 20).agrees_to(LaurentSeries::one(F3), 20));
  CHECK(a_pow_s(P(F3, "T"), s, 20).agrees_to(s.x, 18));
  for (const char* a : {"T+1", "T^2+2", "T^3+T+1"}) {
    for (int i : {0, 1, 2, 7}) {
      const LaurentSeries v = a_pow_s(P(F3, a), SInfinityPoint::integer(F3, i), 30);
      CHECK(v.is_exact());
      CHECK(v == LaurentSeries::from_poly(P(F3, a).pow(i)));
    }
  }
  const SInfinityPoint s2{LaurentSeries::from_ratfunc(R(F3, "(θ^3+θ)/(θ+2)"), 20), PAdicInt::truncated(7, 3)};
  for (const char* a : {"T+1", "T^2+2"}) {
    const LaurentSeries lhs = a_pow_s(P(F3, a), add(s, s2), 20);
    const LaurentSeries rhs = a_pow_s(P(F3, a), s, 20) * a_pow_s(P(F3, a), s2, 20);
    CHECK(lhs.agrees_to(rhs, lhs.valuation() + 15));
  }
  CHECK_THROWS_AS(a_pow_s(P(F3, "2T"), s, 10), Error);
}

TEST_CASE("local factors") {
  auto F2 = field_make(2, 1);
  auto F3 = field_make(3, 1);
  CHECK(local_factor(CarlitzObject{F2}, P(F2, "T")).to_string() == "1 - T*u");
  CHECK(local_factor(CarlitzObject{F2}, P(F2, "T+1")).to_string() == "1 - (T+1)*u");
  const LocalFactor bad = local_factor(TwistObject{R(F3, "(θ+1)/θ")}, P(F3, "T"));
  CHECK(bad.to_string() == "1");
  CHECK(bad.provenance == Provenance::bad_prime_rule);
  CHECK(local_factor(sheaf_of_drinfeld_rank1(R(F3, "(θ+1)/θ")), P(F3, "T")).to_string() == "1");
  for (unsigned r : {2u, 3u}) {
    auto F = field_from_text(std::to_string(r));
    for (const Poly& f : monic_irreducibles(F, 3)) {
      const auto lf = local_factor(carlitz_tensor_power(F, 2).sheaf, f);
      CHECK(lf.denominator == std::vector<Poly>{P(F, "1"), -f.pow(2)});
      CHECK(lf.provenance == Provenance::tau_sheaf_eigenvalue);
      for (const char* b : {"-θ", "(θ+1)/θ", "θ^2", "θ^3+θ+1"}) {
        const RatFunc beta = R(F, b);
        const auto a = local_factor(TwistObject{beta}, f);
        CHECK(a.denominator == local_factor(sheaf_of_drinfeld_rank1(beta), f).denominator);
        CHECK(a.denominator == local_factor(carlitz_twist(beta), f).denominator);
      }
    }
  }
  const auto rank2 = drinfeld_over_k(F2, {RatFunc::zero(F2), RatFunc::one(F2)});
  const auto l2 = local_factor(rank2, P(F2, "T^2+T+1"));
  CHECK(l2.provenance == Provenance::rank2_charpoly);
  CHECK(l2.to_string() == "1 - u + (T^2+T+1)*u^2");
  const auto rank2bad = drinfeld_over_k(F2, {RatFunc::zero(F2), R(F2, "1/θ")});
  try {
    local_factor(rank2bad, P(F2, "T"));
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported);
  }
}

TEST_CASE("Euler products and Dirichlet sums") {
  auto F2 = field_make(2, 1);
  auto F3 = field_make(3, 1);
  const SInfinityPoint s{LaurentSeries::theta_power(F3, 3), PAdicInt::exact(2)};
  const auto empty = euler_product(CarlitzObject{F3}, s, 0, 12);
  CHECK(empty.product == LaurentSeries::one(F3));
  for (const FieldPtr& F : {F2, F3}) {
    const std::vector<LObject> objects{CarlitzObject{F}, TwistObject{R(F, "-θ")}, TauSheafRank1::unit(F),
                                       carlitz_tensor_power(F, 2).sheaf};
    for (const LObject& obj : objects) {
      for (int d_max : {1, 2, 3}) {
        const SInfinityPoint pt{LaurentSeries::theta_power(F, 4), PAdicInt::exact(3)};
        const auto ep = euler_product(obj, pt, d_max, 40);
        REQUIRE(ep.dirichlet.has_value());
        CHECK(ep.product.agrees_to(*ep.dirichlet, std::min(40, ep.truncation_precision)));
        CHECK(ep.truncation_precision > 0);
      }
    }
    // Carlitz at (theta^m / theta^i, -i): the Dirichlet sum is the special polynomial at x = theta^m.
    for (int i = 0; i <= 6; ++i) {
      const int m = i + 3;
      const auto sp = special_polynomial(F, i, SpecialKind::carlitz);
      const int d = sp.degree() + 1;
      const auto ep = euler_product(CarlitzObject{F}, SInfinityPoint::special(F, m, i), d, 60);
      CHECK(ep.dirichlet->agrees_to(evaluate_special(sp, m), 60));
    }
    // zeta_A(s - 1) = L(C, s)
    const SInfinityPoint s1 = SInfinityPoint::integer(F, 1);
    const SInfinityPoint z{LaurentSeries::theta_power(F, 3), PAdicInt::exact(5)};
    const auto lz = euler_product(TauSheafRank1::unit(F), z, 3, 30);
    const auto lc = euler_product(CarlitzObject{F}, add(z, s1), 3, 30);
    CHECK(lz.product.agrees_to(lc.product, 30));
    CHECK(lz.dirichlet->agrees_to(*lc.dirichlet, 30));
  }
  try {
    euler_product(CarlitzObject{F3}, SInfinityPoint::integer(F3, 1), 2, 10);
    FAIL("expected NonConvergent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_convergent);
  }
  const auto rank2 = drinfeld_over_k(F2, {RatFunc::zero(F2), RatFunc::one(F2)});
  const auto ep2 = euler_product(rank2, SInfinityPoint{LaurentSeries::theta_power(F2, 2), PAdicInt::exact(0)}, 2, 20);
  CHECK_FALSE(ep2.dirichlet.has_value());
  CHECK(ep2.primes_used == 3);
}

TEST_CASE("translation identity") {
  for (unsigned r : {2u, 3u}) {
    auto F = field_from_text(std::to_string(r));
    const auto primes = monic_irreducibles(F, 3);
    const auto unit = translate_identity_check(TauSheafRank1::unit(F), 1, primes);
    CHECK(unit.violations() == 0);
    for (const auto& row : unit.rows) CHECK(row.lhs == row.prime);
    CHECK(translate_identity_check(carlitz_sheaf(F), 0, primes).violations() == 0);
    const int n = static_cast<int>(r * r - r);
    const auto delta = translate_identity_check(carlitz_sheaf(F), n, primes);
    CHECK(delta.violations() == 0);
    for (const auto& row : delta.rows) CHECK(row.lhs == row.prime.pow(n + 1));
    // C^{(-theta)} has a pole at T, which is skipped.
    const auto twist = translate_identity_check(sheaf_of_drinfeld_rank1(R(F, "-θ")), 3, primes);
    CHECK(twist.violations() == 0);
    CHECK(twist.rows.size() == primes.size() - 1);
  }
}

TEST_CASE("classification of eigen-systems") {
  for (unsigned r : {2u, 3u}) {
    auto F = field_from_text(std::to_string(r));
    const auto primes = monic_irreducibles(F, 3);
    const long long js[] = {static_cast<long long>(r) - 1, static_cast<long long>(r) - static_cast<long long>(r * r)};
    for (long long j : js) {
      EigenSystem es;
      for (const Poly& f : primes) es.add(f, RatFunc(f).pow(j));
      auto c = classify_eigen_system(es);
      REQUIRE(std::holds_alternative<ClassIITranslate>(c));
      CHECK(std::get<ClassIITranslate>(c).j == j);
      CHECK(std::get<ClassIITranslate>(c).scale == Fq{1});
      // Rescaling by c^{deg P} keeps the verdict and reports the scale.
      for (unsigned cc = 1; cc < r; ++cc) {
        const Fq c0{static_cast<std::uint8_t>(cc)};
        EigenSystem scaled;
        for (const Poly& f : primes) {
          scaled.add(f, RatFunc(f).pow(j) * RatFunc::constant(F, F->pow(c0, f.degree())));
        }
        auto sc = classify_eigen_system(scaled);
        REQUIRE(std::holds_alternative<ClassIITranslate>(sc));
        CHECK(std::get<ClassIITranslate>(sc).scale == c0);
      }
    }
  }
  auto F3 = field_make(3, 1);
  EigenSystem chi;
  for (const Poly& f : monic_irreducibles(F3, 3)) {
    if (f == P(F3, "T")) continue;
    chi.add(f, RatFunc(f) * RatFunc::constant(F3, F3->inv(chi_beta(R(F3, "-θ"), f))));
  }
  auto c = classify_eigen_system(chi);
  REQUIRE(std::holds_alternative<ClassIWitness>(c));
  const auto& w = std::get<ClassIWitness>(c);
  CHECK(w.j == 1);
  for (const auto& [f, cp] : w.characters) CHECK(cp == f.coeff(0));
  REQUIRE(w.conductor.has_value());
  CHECK(w.conductor->modulus == P(F3, "T"));
  CHECK(w.conductor->note == "values depend only on f mod T");
  // Rescaled: still class I, table shifted by the degree character.
  EigenSystem chi2;
  for (const auto& [f, a] : chi.values) chi2.add(f, a * RatFunc::constant(F3, F3->pow(Fq{2}, f.degree())));
  auto c2 = classify_eigen_system(chi2);
  REQUIRE(std::holds_alternative<ClassIWitness>(c2));
  for (const auto& [f, cp] : std::get<ClassIWitness>(c2).characters) {
    CHECK(cp == F3->mul(w.characters.at(f), F3->pow(Fq{2}, f.degree())));
  }
  EigenSystem single;
  single.add(P(F3, "T"), R(F3, "θ"));
  single.add(P(F3, "T+1"), R(F3, "θ+1"));
  CHECK_THROWS_AS(classify_eigen_system(single), Error);
  EigenSystem nomatch;
  nomatch.add(P(F3, "T"), R(F3, "θ+1"));
  nomatch.add(P(F3, "T^2+1"), R(F3, "θ^2"));
  CHECK(std::holds_alternative<NoMatch>(classify_eigen_system(nomatch)));
  CHECK_THROWS_AS(single.add(P(F3, "T+2"), RatFunc::zero(F3)), Error);
}

TEST_CASE("v-adic congruences") {
  auto F2 = field_make(2, 1);
  auto F3 = field_make(3, 1);
  const auto r3 = vadic_congruence_check(F3, 1, 4, 1, 3);
  CHECK(r3.ok());
  for (const auto& row : r3.rows) CHECK(row.agreement >= 3);
  CHECK(vadic_congruence_check(F2, 1, 3, 1, 4).ok());
  const auto same = vadic_congruence_check(F3, 5, 5, 2, 2);
  for (const auto& row : same.rows) CHECK(row.agreement == same.working_precision);
  CHECK(vadic_congruence_check(F3, -2, 7, 2, 2).ok());
  CHECK_THROWS_AS(vadic_congruence_check(F3, 1, 2, 1, 2), Error);
}
