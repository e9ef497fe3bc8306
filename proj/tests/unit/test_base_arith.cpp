#include <map>
#include <random>

#include "doctest.h"
#include "drinfeld/base_arith/error.hpp"
#include "drinfeld/base_arith/expr.hpp"
#include "drinfeld/base_arith/ext_field.hpp"
#include "drinfeld/base_arith/irreducible.hpp"
#include "drinfeld/base_arith/laurent.hpp"
#include "drinfeld/base_arith/resultant.hpp"

using namespace drinfeld;

namespace {

Poly P(const FieldPtr& F, const char* s) { return parse_poly(F, s); }

Poly random_poly(const FieldPtr& F, std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<unsigned> c(0, F->r() - 1);
  std::vector<Fq> v(deg(rng) + 1);
  for (auto& x : v) x = F->element(c(rng));
  return Poly(F, v);
}

int mobius(int n) {
  int result = 1;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

long long necklace(int r, int d) {
  long long total = 0;
  for (int k = 1; k <= d; ++k) {
    if (d % k) continue;
    long long rk = 1;
    for (int i = 0; i < k; ++i) rk *= r;
    total += mobius(d / k) * rk;
  }
  return total / d;
}

// Polynomial in T with coefficients in an extension field, low to high.
using ExtPoly = std::vector<GfElem>;

ExtPoly ext_mul(const ExtPoly& a, const ExtPoly& b) {
  ExtPoly out(a.size() + b.size() - 1, a[0].field()->zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Oracle: product over the roots of irreducible f of g(T, root), by explicit
// roots in F_{r^d}.
Poly root_product(const Poly& f, const BiPoly& g) {
  const FieldPtr& F = f.field();
  ExtFieldPtr L = canonical_extension(F, f.degree());
  GfElem root;
  bool found = false;
  for (std::uint64_t idx = 0; idx < L->order() && !found; ++idx) {
    GfElem a = L->from_index(idx);
    if (evaluate(f, a).is_zero()) {
      root = a;
      found = true;
    }
  }
  REQUIRE(found);
  int tdeg = 0;
  for (const Poly& c : g) tdeg = std::max(tdeg, c.degree());
  ExtPoly prod{L->one()};
  GfElem conj = root;
  for (int i = 0; i < f.degree(); ++i) {
    ExtPoly gi(tdeg + 1, L->zero());
    for (int t = 0; t <= tdeg; ++t) {
      GfElem acc = L->zero();
      for (int j = static_cast<int>(g.size()) - 1; j >= 0; --j) acc = acc * conj + L->scalar(g[j].coeff(t));
      gi[t] = acc;
    }
    prod = ext_mul(prod, gi);
    conj = conj.frobenius();
  }
  std::vector<Fq> out;
  for (const GfElem& c : prod) {
    REQUIRE(c.rep().degree() <= 0);
    out.push_back(c.rep().coeff(0));
  }
  return Poly(F, out);
}

// Lucas' theorem: binomial(n, k) mod p.
unsigned lucas(unsigned long long n, unsigned long long k, unsigned p) {
  unsigned long long result = 1;
  while (n || k) {
    const unsigned a = n % p, b = k % p;
    if (b > a) return 0;
    unsigned long long c = 1;
    for (unsigned i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
    result = result * (c % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<unsigned>(result);
}

// Oracle: binomial series sum_{k<N} binom(y,k) w^k with binomials mod p.
LaurentSeries binomial_series(const LaurentSeries& u, long long y, int N) {
  const FieldPtr& F = u.field();
  const unsigned p = F->p();
  long long mod = 1;
  while (mod < N) mod *= p;
  long long yr = y % mod;
  if (yr < 0) yr += mod;
  const LaurentSeries w = (u - LaurentSeries::one(F)).truncated(N);
  LaurentSeries sum = LaurentSeries::zero(F, N);
  LaurentSeries wk = LaurentSeries::one(F);
  for (int k = 0; k < N; ++k) {
    sum = sum + wk.scaled(F->from_integer(lucas(yr, k, p)));
    wk = (wk * w).truncated(N);
  }
  return sum.truncated(N);
}

}  // namespace

TEST_CASE("field_make picks the least irreducible modulus") {
  auto F2 = field_make(2, 1);
  CHECK(F2->r() == 2);
  CHECK(F2->modulus() == std::vector<unsigned>{0, 1});
  auto F3 = field_make(3, 1);
  CHECK(F3->r() == 3);
  auto F4 = field_make(2, 2);
  CHECK(F4->modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK_THROWS_AS(field_make(4, 1), Error);
  try {
    field_make(2, 5);
    FAIL("expected BoundExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bound_exceeded);
  }
  CHECK(field_from_text("4")->m() == 2);
  CHECK(field_from_text("3^2")->r() == 9);
  CHECK_THROWS_AS(field_from_text("6"), Error);
}

TEST_CASE("every small field has a cyclic unit group of order r-1") {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}}) {
    auto F = field_make(p, m);
    const unsigned r = F->r();
    bool has_generator = false;
    for (unsigned a = 1; a < r; ++a) {
      const Fq x = F->element(a);
      CHECK(F->pow(x, r - 1) == F->one());
      CHECK(F->mul(x, F->inv(x)) == F->one());
      unsigned order = 1;
      for (Fq y = x; y != F->one(); y = F->mul(y, x)) ++order;
      if (order == r - 1) has_generator = true;
    }
    CHECK(has_generator);
    for (unsigned a = 0; a < r; ++a) CHECK(F->pow(F->element(a), r) == F->element(a));
  }
}

TEST_CASE("monic_irreducibles matches enumeration and necklace counts") {
  auto F2 = field_make(2, 1);
  auto one = monic_irreducibles(F2, 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].to_string() == "T");
  CHECK(one[1].to_string() == "T+1");
  auto two = monic_irreducibles(F2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[2].to_string() == "T^2+T+1");
  auto F3 = field_make(3, 1);
  CHECK(monic_irreducibles_of_degree(F3, 2).size() == 3);
  for (unsigned r : {2u, 3u, 4u}) {
    auto F = field_from_text(std::to_string(r));
    for (int d = 1; d <= 4; ++d) {
      auto layer = monic_irreducibles_of_degree(F, d);
      CHECK(static_cast<long long>(layer.size()) == necklace(static_cast<int>(r), d));
      for (const Poly& f : layer) CHECK(is_irreducible_rabin(f));
      CHECK(std::is_sorted(layer.begin(), layer.end()));
    }
  }
  DeskBounds tiny;
  tiny.max_enumeration = 8;
  CHECK_THROWS_AS(monic_irreducibles(F2, 4, tiny), Error);
}

TEST_CASE("polynomial division, gcd and crt") {
  std::mt19937 rng(7);
  for (unsigned r : {2u, 3u, 4u, 5u}) {
    auto F = field_from_text(std::to_string(r));
    for (int it = 0; it < 50; ++it) {
      Poly a = random_poly(F, rng, 8), b = random_poly(F, rng, 5);
      if (b.is_zero()) continue;
      DivMod qr = divmod(a, b);
      CHECK(qr.quot * b + qr.rem == a);
      CHECK(qr.rem.degree() < b.degree());
      XGcd g = xgcd(a, b);
      CHECK(g.s * a + g.t * b == g.g);
      CHECK(g.g == gcd(a, b));
      Poly c = random_poly(F, rng, 4);
      CHECK((a * (b + c)) == a * b + a * c);
    }
  }
  auto F3 = field_make(3, 1);
  CrtState s{Poly(F3), Poly::constant(F3, Fq{1})};
  s = crt_combine(s, P(F3, "2"), P(F3, "T"));
  s = crt_combine(s, P(F3, "1"), P(F3, "T+1"));
  CHECK((s.value % P(F3, "T")) == P(F3, "2"));
  CHECK((s.value % P(F3, "T+1")) == P(F3, "1"));
}

TEST_CASE("canonical text encoding round-trips") {
  auto F2 = field_make(2, 1);
  CHECK(P(F2, "T^2+T+1").codes() == std::vector<unsigned>{1, 1, 1});
  CHECK(Poly::from_codes(F2, {1, 1, 1}).to_string() == "T^2+T+1");
  CHECK(Poly(F2).to_string() == "0");
  auto F3 = field_make(3, 1);
  CHECK(P(F3, "2T^3+T+1").to_string() == "2T^3+T+1");
  CHECK(P(F3, "-T").to_string() == "2T");
  CHECK(parse_ratfunc(F3, "(θ+1)/θ").to_string() == "(θ+1)/θ");
  CHECK(parse_ratfunc(F3, "(theta+1)/theta") == parse_ratfunc(F3, "(T+1)/T"));
  CHECK(parse_ratfunc(F3, "θ^-2") == parse_ratfunc(F3, "1/θ^2"));
  std::mt19937 rng(3);
  auto F4 = field_make(2, 2);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(F4, rng, 6);
    CHECK(P(F4, a.to_string().c_str()) == a);
  }
  try {
    parse_ratfunc(F3, "T+3");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_ratfunc(F3, "(T+1"), Error);
  CHECK_THROWS_AS(parse_ratfunc(F3, "1/(T-T)"), Error);
}

TEST_CASE("extension fields: Frobenius is an automorphism fixing x^{r^N} = x") {
  for (auto [r, N] : std::vector<std::pair<unsigned, int>>{{2, 1}, {2, 4}, {2, 8}, {3, 2}, {3, 5}, {4, 2}, {4, 4}, {16, 2}, {5, 3}}) {
    auto F = field_from_text(std::to_string(r));
    auto L = canonical_extension(F, N);
    REQUIRE(L->order() <= 256);
    for (std::uint64_t i = 0; i < L->order(); ++i) {
      GfElem a = L->from_index(i);
      CHECK(a.frobenius(N) == a);
      CHECK(a.index() == i);
    }
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint64_t> pick(0, L->order() - 1);
    for (int it = 0; it < 40; ++it) {
      GfElem a = L->from_index(pick(rng)), b = L->from_index(pick(rng));
      CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
      CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
      if (!a.is_zero()) CHECK(a * a.inverse() == L->one());
      CHECK(L->frobenius_matrix().apply(a.coords()) == a.frobenius().coords());
      CHECK(L->multiplication_matrix(a).apply(b.coords()) == (a * b).coords());
    }
    // Frobenius fixes exactly the scalars.
    const FrMatrix fixed = L->frobenius_matrix() - FrMatrix::identity(F, N);
    CHECK(fixed.kernel().size() == 1);
  }
  auto F2 = field_make(2, 1);
  CHECK(canonical_extension(F2, 2)->modulus().to_string("x") == "x^2+x+1");
  CHECK(canonical_extension(F2, 3)->modulus().to_string("x") == "x^3+x+1");
  CHECK_THROWS_AS(ExtField::make(P(F2, "T^2+1")), Error);
}

TEST_CASE("F_r linear algebra") {
  auto F3 = field_make(3, 1);
  FrMatrix m(F3, 2, 3);
  m(0, 0) = Fq{1}; m(0, 1) = Fq{2};
  m(1, 2) = Fq{1};
  CHECK(m.rank() == 2);
  auto ker = m.kernel();
  REQUIRE(ker.size() == 1);
  CHECK(m.apply(ker[0]) == FrVector{Fq{0}, Fq{0}});
  auto x = m.solve(FrVector{Fq{1}, Fq{2}});
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == FrVector{Fq{1}, Fq{2}});
  FrMatrix z(F3, 2, 2);
  CHECK_FALSE(z.solve(FrVector{Fq{1}, Fq{0}}).has_value());
}

TEST_CASE("resultant examples and root-product oracle") {
  auto F3 = field_make(3, 1);
  auto T = [&](const char* s) { return P(F3, s); };
  // f = theta - a, g = theta - b gives a - b.
  for (unsigned a = 0; a < 3; ++a) {
    for (unsigned b = 0; b < 3; ++b) {
      Poly f = Poly(F3, {F3->neg(F3->element(a)), Fq{1}});
      Poly g = Poly(F3, {F3->neg(F3->element(b)), Fq{1}});
      CHECK(resultant_constant(f, g) == F3->sub(F3->element(a), F3->element(b)));
    }
  }
  CHECK(resultant_constant(T("T^2+1"), T("T+1")) == Fq{2});
  // g = T - theta gives f(T).
  for (unsigned r : {2u, 3u, 4u}) {
    auto F = field_from_text(std::to_string(r));
    const BiPoly g{Poly::variable(F), Poly::constant(F, F->neg(F->one()))};
    for (int d = 1; d <= 4; ++d) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= r;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = Poly::monic_from_index(F, d, idx);
        CHECK(resultant(f, g) == f);
      }
    }
  }
  // Multiplicativity and agreement with explicit root products.
  std::mt19937 rng(5);
  for (unsigned r : {2u, 3u}) {
    auto F = field_from_text(std::to_string(r));
    auto primes = monic_irreducibles(F, 3);
    for (int it = 0; it < 30; ++it) {
      const Poly& f = primes[rng() % primes.size()];
      BiPoly g{random_poly(F, rng, 2), random_poly(F, rng, 2), random_poly(F, rng, 2)};
      BiPoly h{random_poly(F, rng, 2), random_poly(F, rng, 2)};
      if (g.back().is_zero() || h.back().is_zero()) continue;
      BiPoly gh(g.size() + h.size() - 1, Poly(F));
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j) gh[i + j] += g[i] * h[j];
      CHECK(resultant(f, gh) == resultant(f, g) * resultant(f, h));
      CHECK(resultant(f, g) == root_product(f, g));
    }
  }
  CHECK_THROWS_AS(resultant(T("T"), BiPoly{Poly(F3)}), Error);
}

TEST_CASE("Laurent series arithmetic tracks precision") {
  auto F3 = field_make(3, 1);
  auto u = LaurentSeries::from_ratfunc(parse_ratfunc(F3, "1+1/θ"), 10);
  CHECK(u.is_exact());
  auto inv = u.inverse(8);
  CHECK(inv.precision() == 8);
  CHECK(inv.to_string(4) == "1 + 2/θ + 1/θ^2 + 2/θ^3 + O(1/θ^8)");
  CHECK((u * inv).agrees_to(LaurentSeries::one(F3), 8));
  auto x = LaurentSeries::zero(F3, 5) + LaurentSeries::theta_power(F3, 2);
  CHECK(x.precision() == 5);
  CHECK((x * x).precision() == 3);
  CHECK_THROWS_AS(x.coeff(5), Error);
}

TEST_CASE("one_unit_pow against the binomial series") {
  auto F3 = field_make(3, 1);
  auto u = LaurentSeries::from_ratfunc(parse_ratfunc(F3, "1+1/θ"), 20);
  CHECK(one_unit_pow(u, PAdicInt::exact(0), 20) == LaurentSeries::one(F3));
  CHECK(one_unit_pow(u, PAdicInt::exact(1), 20) == u);
  auto m1 = one_unit_pow(u, PAdicInt::exact(-1), 20);
  CHECK(m1.to_string(4) == "1 + 2/θ + 1/θ^2 + 2/θ^3 + O(1/θ^20)");
  CHECK((m1 * u).agrees_to(LaurentSeries::one(F3), 20));
  CHECK_THROWS_AS(one_unit_pow(LaurentSeries::theta_power(F3, 1), PAdicInt::exact(2), 10), Error);

  std::mt19937 rng(9);
  for (unsigned r : {2u, 3u, 4u, 5u}) {
    auto F = field_from_text(std::to_string(r));
    for (int it = 0; it < 10; ++it) {
      Poly w = random_poly(F, rng, 4);
      auto base = LaurentSeries::one(F) + LaurentSeries::from_poly(w) * LaurentSeries::theta_power(F, -5);
      const int N = 25;
      for (long long y : {-7LL, -1LL, 2LL, 5LL, 13LL, 40LL}) {
        auto got = one_unit_pow(base, PAdicInt::exact(y), N).truncated(N);
        CHECK(got.agrees_to(binomial_series(base, y, N), N));
      }
      const long long y1 = 7, y2 = -12;
      auto lhs = one_unit_pow(base, PAdicInt::exact(y1 + y2), N);
      auto rhs = one_unit_pow(base, PAdicInt::exact(y1), N) * one_unit_pow(base, PAdicInt::exact(y2), N);
      CHECK(lhs.agrees_to(rhs, N));
      // Truncated exponent: correct only modulo (1/theta)^{p^M}.
      auto t = one_unit_pow(base, PAdicInt::truncated(y1, 2), 1000);
      CHECK(t.precision() == static_cast<int>(F->p() * F->p()));
      CHECK(t.agrees_to(one_unit_pow(base, PAdicInt::exact(y1), 1000), t.precision()));
    }
  }
}

TEST_CASE("root_pow_r_minus_1") {
  auto F3 = field_make(3, 1);
  auto beta = parse_ratfunc(F3, "1+1/θ");
  auto res = root_pow_r_minus_1(beta, 12);
  REQUIRE(std::holds_alternative<LaurentSeries>(res));
  const auto& alpha = std::get<LaurentSeries>(res);
  CHECK(alpha.to_string(3).starts_with("1 + 2/θ + 1/θ^2"));
  CHECK((alpha * alpha).agrees_to(LaurentSeries::from_ratfunc(beta, 12), 12));
  auto bad = root_pow_r_minus_1(parse_ratfunc(F3, "-θ"), 10);
  REQUIRE(std::holds_alternative<NotAPower>(bad));
  CHECK(std::get<NotAPower>(bad).reason.find("valuation") != std::string::npos);
  auto lead = root_pow_r_minus_1(parse_ratfunc(F3, "2θ^2"), 10);
  REQUIRE(std::holds_alternative<NotAPower>(lead));
  CHECK(std::get<NotAPower>(lead).reason.find("leading") != std::string::npos);
  auto one = root_pow_r_minus_1(RatFunc::one(F3), 5);
  REQUIRE(std::holds_alternative<LaurentSeries>(one));
  CHECK(std::get<LaurentSeries>(one).agrees_to(LaurentSeries::one(F3), 5));
  CHECK_THROWS_AS(root_pow_r_minus_1(RatFunc::zero(F3), 5), Error);

  std::mt19937 rng(13);
  for (unsigned r : {2u, 3u, 4u, 5u, 7u}) {
    auto F = field_from_text(std::to_string(r));
    for (int it = 0; it < 20; ++it) {
      Poly n = random_poly(F, rng, 5), d = random_poly(F, rng, 4);
      if (n.is_zero() || d.is_zero()) continue;
      RatFunc b(n.monic(), d);
      auto out = root_pow_r_minus_1(b, 15);
      if (auto* a = std::get_if<LaurentSeries>(&out)) {
        auto power = a->pow(static_cast<long long>(r) - 1, 15);
        CHECK(power.agrees_to(LaurentSeries::from_ratfunc(b, 15), power.precision()));
        CHECK(power.relative_precision() >= 15);
      } else {
        const bool valuation_ok = b.infinite_valuation() % static_cast<int>(r - 1) == 0;
        const bool leading_ok = F->div(b.num().leading(), b.den().leading()) == F->one();
        CHECK_FALSE((valuation_ok && leading_ok));
      }
    }
  }
}
