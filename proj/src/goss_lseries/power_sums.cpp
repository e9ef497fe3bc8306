// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/goss_lseries/power_sums.hpp"

#include "drinfeld/base_arith/error.hpp"
#include <algorithm>
#include <cstdint>

#include "drinfeld/base_arith/ext_field.hpp"
#include "drinfeld/base_arith/irreducible.hpp"

namespace drinfeld {

namespace {

std::uint64_t checked_count(unsigned r, int e, std::uint64_t limit, const char* what) {
  std::uint64_t n = 1;
  for (int i = 0; i < e; ++i) {
    n *= r;
    if (n > limit) {
      throw Error(Errc::bound_exceeded, std::string(what) + ": " + std::to_string(r) + "^" + std::to_string(e) +
                                            " monics exceed max_enumeration=" + std::to_string(limit));
    }
  }
  return n;
}

// Base-p submasks l of j (digitwise l_t <= j_t) with binom(j, l) mod p,
// which is nonzero exactly on these l by Lucas.
struct Submask {
  long long l;
  unsigned binom;
};

std::vector<Submask> submasks(unsigned p, long long j) {
  std::vector<unsigned> digits;
  for (long long x = j; x > 0; x /= p) digits.push_back(static_cast<unsigned>(x % p));
  // binomials mod p for small arguments
  std::vector<std::vector<unsigned>> c(p, std::vector<unsigned>(p, 0));
  for (unsigned a = 0; a < p; ++a) {
    c[a][0] = 1;
    for (unsigned b = 1; b <= a; ++b) c[a][b] = (c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0)) % p;
  }
  std::vector<Submask> out{{0, 1}};
  long long place = 1;
  for (unsigned d : digits) {
    std::vector<Submask> next;
    next.reserve(out.size() * (d + 1));
    for (const Submask& s : out) {
      for (unsigned t = 0; t <= d; ++t) next.push_back({s.l + t * place, (s.binom * c[d][t]) % p});
    }
    out = std::move(next);
    place *= p;
  }
  return out;
}

}  // namespace

int digit_weight(unsigned p, long long k) {
  int w = 0;
  for (; k > 0; k /= p) w += static_cast<int>(k % p);
  return w;
}

int power_sum_degree_bound(const FiniteField& field, long long k) {
  const long long by_size = k / (field.r() - 1);
  const long long by_weight = digit_weight(field.p(), k) / (field.m() * (field.p() - 1));
  return static_cast<int>(std::min(by_size, by_weight));
}

bool power_sum_vanishes(const FiniteField& field, int e, long long k) {
  if (e == 0) return false;
  return e > power_sum_degree_bound(field, k);
}

std::vector<Poly> power_sums_enumerated(const FieldPtr& field, int e, int k_max, const DeskBounds& bounds) {
  const unsigned r = field->r();
  const std::uint64_t count = checked_count(r, e, bounds.max_enumeration, "power sum enumeration");
  const FiniteField& F = *field;
  std::vector<std::vector<Fq>> sums(k_max + 1);
  for (int k = 0; k <= k_max; ++k) sums[k].assign(static_cast<std::size_t>(e) * k + 1, Fq{0});
  std::vector<Fq> n(e + 1), pw, next;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < e; ++i, rest /= r) n[i] = Fq{static_cast<std::uint8_t>(rest % r)};
    n[e] = Fq{1};
    pw.assign(1, Fq{1});
    sums[0][0] = F.add(sums[0][0], Fq{1});
    for (int k = 1; k <= k_max; ++k) {
      next.assign(pw.size() + e, Fq{0});
      for (std::size_t a = 0; a < pw.size(); ++a) {
        if (pw[a].code == 0) continue;
        for (int b = 0; b <= e; ++b) next[a + b] = F.add(next[a + b], F.mul(pw[a], n[b]));
      }
      pw.swap(next);
      std::vector<Fq>& s = sums[k];
      for (std::size_t a = 0; a < pw.size(); ++a) s[a] = F.add(s[a], pw[a]);
    }
  }
  std::vector<Poly> out;
  out.reserve(sums.size());
  for (auto& s : sums) out.emplace_back(field, std::move(s));
  return out;
}

Poly power_sum(const FieldPtr& field, int e, long long k, const DeskBounds& bounds) {
  if (e < 0 || k < 0) throw Error(Errc::invalid_argument, "power sum needs e >= 0 and k >= 0");
  if (power_sum_vanishes(*field, e, k)) return Poly(field);
  if (static_cast<std::uint64_t>(k) > bounds.max_enumeration) {
    throw Error(Errc::bound_exceeded, "power sum exponent " + std::to_string(k) + " exceeds max_enumeration=" +
                                          std::to_string(bounds.max_enumeration));
  }
  const std::uint64_t count = checked_count(field->r(), e, bounds.max_enumeration, "power sum enumeration");
  Poly acc(field);
  for (std::uint64_t idx = 0; idx < count; ++idx) acc += Poly::monic_from_index(field, e, idx).pow(static_cast<std::uint64_t>(k));
  return acc;
}

PowerSumTable::PowerSumTable(FieldPtr field, int k_max) : field_(std::move(field)), k_max_(k_max) {
  if (k_max < 0) throw Error(Errc::invalid_argument, "power sum table needs k_max >= 0");
}

void PowerSumTable::fill_row(int d) {
  const FiniteField& F = *field_;
  const unsigned p = F.p();
  const long long q = F.r() - 1;
  std::vector<Poly> row(k_max_ + 1, Poly(field_));
  if (d == 0) {
    row[0] = Poly::constant(field_, Fq{1});
  } else {
    const std::vector<Poly>& prev = rows_[d - 1];
    for (int j = 1; j <= k_max_; ++j) {
      if (j < d * q || digit_weight(p, j) < d * static_cast<int>(F.m() * (p - 1))) continue;
      Poly acc(field_);
      for (const Submask& s : submasks(p, j)) {
        if (s.l >= j || (j - s.l) % q != 0 || s.binom == 0 || prev[s.l].is_zero()) continue;
        acc += prev[s.l].shifted(static_cast<int>((d - 1) * (j - s.l))).scaled(F.from_integer(s.binom));
      }
      row[j] = -acc;
    }
  }
  rows_.push_back(std::move(row));
}

const Poly& PowerSumTable::all_sum(int d, int j) {
  while (static_cast<int>(rows_.size()) <= d) fill_row(static_cast<int>(rows_.size()));
  return rows_[d][j];
}

Poly PowerSumTable::power_sum(int e, int k) {
  if (k < 0 || k > k_max_) {
    throw Error(Errc::invalid_argument, "exponent " + std::to_string(k) + " outside the table range 0.." +
                                            std::to_string(k_max_));
  }
  if (e == 0) return Poly::constant(field_, Fq{1});
  if (power_sum_vanishes(*field_, e, k)) return Poly(field_);
  const FiniteField& F = *field_;
  Poly acc(field_);
  for (const Submask& s : submasks(F.p(), k)) {
    const Poly& base = all_sum(e, static_cast<int>(s.l));
    if (base.is_zero()) continue;
    acc += base.shifted(static_cast<int>(e * (k - s.l))).scaled(F.from_integer(s.binom));
  }
  return acc;
}

std::string kind_name(SpecialKind kind) { return kind == SpecialKind::zeta ? "zeta" : "carlitz"; }

SpecialKind parse_kind(const std::string& text) {
  if (text == "zeta") return SpecialKind::zeta;
  if (text == "carlitz") return SpecialKind::carlitz;
  throw Error(Errc::parse_error, "unknown special polynomial kind '" + text + "' (expected zeta or carlitz)");
}

std::string coefficient_text(const Poly& c) {
  if (c.is_one()) return "";
  int terms = 0;
  for (Fq x : c.coeffs()) terms += x.code != 0;
  return terms <= 1 ? c.to_string() : "(" + c.to_string() + ")";
}

std::string SpecialPolynomial::to_string() const {
  std::string s;
  for (int e = 0; e <= degree(); ++e) {
    const Poly& c = coeffs[e];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (e == 0) {
      s += c.to_string();
    } else {
      const std::string ct = coefficient_text(c);
      s += (ct.empty() ? "" : ct + "*") + "x^-" + std::to_string(e);
    }
  }
  return s.empty() ? "0" : s;
}

namespace {

void trim(std::vector<Poly>& coeffs) {
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

SpecialPolynomial special_polynomial(PowerSumTable& table, int i, SpecialKind kind) {
  if (i < 0) throw Error(Errc::invalid_argument, "special polynomial index must be >= 0");
  SpecialPolynomial sp{kind, i, static_cast<int>(special_exponent(kind, i)), {}};
  const int e_max = power_sum_degree_bound(*table.field(), sp.k);
  for (int e = 0; e <= e_max; ++e) sp.coeffs.push_back(table.power_sum(e, sp.k));
  trim(sp.coeffs);
  return sp;
}

SpecialPolynomial special_polynomial(const FieldPtr& field, int i, SpecialKind kind, const DeskBounds& bounds) {
  if (i < 0) throw Error(Errc::invalid_argument, "special polynomial index must be >= 0");
  const long long k = special_exponent(kind, i);
  if (static_cast<std::uint64_t>(k) > bounds.max_enumeration) {
    throw Error(Errc::bound_exceeded, "exponent " + std::to_string(k) + " exceeds max_enumeration=" +
                                          std::to_string(bounds.max_enumeration));
  }
  PowerSumTable table(field, static_cast<int>(k));
  return special_polynomial(table, i, kind);
}

std::vector<SpecialPolynomial> special_polynomials_enumerated(const FieldPtr& field, int i_max, SpecialKind kind,
                                                              std::uint64_t enumeration_limit) {
  const int k_max = static_cast<int>(special_exponent(kind, i_max));
  const long long q = field->r() - 1;
  DeskBounds bounds;
  bounds.max_enumeration = enumeration_limit;
  std::vector<SpecialPolynomial> out;
  for (int i = 0; i <= i_max; ++i) {
    SpecialPolynomial sp{kind, i, static_cast<int>(special_exponent(kind, i)), {}};
    out.push_back(sp);
  }
  std::uint64_t count = 1;
  for (int e = 0; e <= k_max / q; ++e) {
    if (count > enumeration_limit) {
      for (int i = 0; i <= i_max; ++i) {
        if (e <= out[i].k / q && !power_sum_vanishes(*field, e, out[i].k)) {
          throw Error(Errc::bound_exceeded, "S_" + std::to_string(e) + "(" + std::to_string(out[i].k) +
                                                ") needs enumeration beyond " + std::to_string(enumeration_limit));
        }
      }
      break;
    }
    const std::vector<Poly> sums = power_sums_enumerated(field, e, k_max, bounds);
    for (int i = 0; i <= i_max; ++i) {
      if (e <= out[i].k / q) out[i].coeffs.push_back(sums[out[i].k]);
    }
    count *= field->r();
  }
  for (auto& sp : out) trim(sp.coeffs);
  return out;
}

namespace {

// F_{r^N}^* in logarithmic form with Zech logarithms for addition. Element
// code q-1 stands for zero.
class LogField {
 public:
  explicit LogField(const ExtFieldPtr& L) : order_(L->order()), zero_(static_cast<std::uint32_t>(order_ - 1)) {
    const std::uint64_t n = order_ - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        primes.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) primes.push_back(m);
    GfElem g;
    for (std::uint64_t idx = 2; idx < order_; ++idx) {
      g = L->from_index(idx);
      bool primitive = true;
      for (std::uint64_t pr : primes) primitive = primitive && !g.pow(n / pr).is_one();
      if (primitive) break;
    }
    antilog_.resize(n);
    log_.assign(order_, zero_);
    GfElem cur = L->one();
    for (std::uint64_t e = 0; e < n; ++e) {
      const std::uint64_t idx = cur.index();
      antilog_[e] = static_cast<std::uint32_t>(idx);
      log_[idx] = static_cast<std::uint32_t>(e);
      cur = cur * g;
    }
    const FiniteField& F = *L->base();
    const unsigned r = F.r();
    zech_.resize(n);
    for (std::uint64_t e = 0; e < n; ++e) {
      const std::uint32_t idx = antilog_[e];
      const unsigned d0 = idx % r;
      zech_[e] = log_[idx - d0 + F.add(Fq{static_cast<std::uint8_t>(d0)}, Fq{1}).code];
    }
  }

  std::uint32_t zero() const noexcept { return zero_; }
  std::uint32_t scalar(Fq c) const noexcept { return log_[c.code]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == zero_ || b == zero_) return zero_;
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + b) % (order_ - 1));
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == zero_) return b;
    if (b == zero_) return a;
    const std::uint64_t n = order_ - 1;
    const std::uint32_t z = zech_[(b + n - a) % n];
    if (z == zero_) return zero_;
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) + z) % n);
  }
  // g^e for the primitive element g.
  std::uint32_t power_of_generator(std::uint64_t e) const noexcept {
    return static_cast<std::uint32_t>(e % (order_ - 1));
  }
  // x^e for x given in log form.
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const noexcept {
    if (x == zero_) return e == 0 ? 0 : zero_;
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * (e % (order_ - 1))) % (order_ - 1));
  }

 private:
  std::uint64_t order_;
  std::uint32_t zero_;
  std::vector<std::uint32_t> antilog_, log_, zech_;
};

// P_d(j) evaluated at one point, in log form.
struct PointTable {
  std::uint32_t point;
  std::vector<std::vector<std::uint32_t>> rows;
};

PointTable build_point_table(const LogField& lf, const FiniteField& F, std::uint32_t point, int d_max, int k_max) {
  const unsigned p = F.p();
  const long long q = F.r() - 1;
  const std::uint32_t minus_one = lf.scalar(F.neg(Fq{1}));
  PointTable t{point, {}};
  t.rows.assign(d_max + 1, std::vector<std::uint32_t>(k_max + 1, lf.zero()));
  t.rows[0][0] = lf.scalar(Fq{1});
  for (int d = 1; d <= d_max; ++d) {
    const auto& prev = t.rows[d - 1];
    for (int j = 1; j <= k_max; ++j) {
      if (j < d * q || digit_weight(p, j) < d * static_cast<int>(F.m() * (p - 1))) continue;
      std::uint32_t acc = lf.zero();
      for (const Submask& s : submasks(p, j)) {
        if (s.l >= j || (j - s.l) % q != 0 || s.binom == 0 || prev[s.l] == lf.zero()) continue;
        const std::uint32_t term = lf.mul(lf.mul(prev[s.l], lf.pow(point, static_cast<std::uint64_t>((d - 1) * (j - s.l)))),
                                          lf.scalar(F.from_integer(s.binom)));
        acc = lf.add(acc, term);
      }
      t.rows[d][j] = lf.mul(acc, minus_one);
    }
  }
  return t;
}

std::uint32_t evaluate_power_sum(const LogField& lf, const FiniteField& F, const PointTable& t, int e, int k) {
  std::uint32_t acc = lf.zero();
  for (const Submask& s : submasks(F.p(), k)) {
    const std::uint32_t base = t.rows[e][s.l];
    if (base == lf.zero()) continue;
    acc = lf.add(acc, lf.mul(lf.mul(base, lf.pow(t.point, static_cast<std::uint64_t>(e) * (k - s.l))),
                             lf.scalar(F.from_integer(s.binom))));
  }
  return acc;
}

}  // namespace

SpecialDegreeScan special_degrees(const FieldPtr& field, int i_max, SpecialKind kind, const DeskBounds& bounds) {
  if (i_max < 0) return {kind, {}, 0, 0, 0};
  const FiniteField& F = *field;
  const int k_max = static_cast<int>(special_exponent(kind, i_max));
  int d_max = 0;
  for (int k = 0; k <= k_max; ++k) d_max = std::max(d_max, power_sum_degree_bound(F, k));
  // Smallest extension with at least 2^19 elements, enough points to certify
  // a zero coefficient of T-degree up to d_max * k_max.
  int N = 1;
  std::uint64_t order = F.r();
  const std::uint64_t needed = std::max<std::uint64_t>(1u << 19, static_cast<std::uint64_t>(d_max) * k_max + 2);
  while (order < needed) {
    order *= F.r();
    ++N;
  }
  if (N > bounds.max_extension_degree || order > (1ull << 26)) {
    throw Error(Errc::bound_exceeded, "degree scan needs F_{r^" + std::to_string(N) +
                                          "}, beyond max_extension_degree or table size");
  }
  const ExtFieldPtr L = canonical_extension(field, N, bounds);
  const LogField lf(L);
  std::vector<PointTable> points;
  auto point = [&](std::size_t idx) -> const PointTable& {
    while (points.size() <= idx) {
      points.push_back(build_point_table(lf, F, lf.power_of_generator(points.size() + 1), d_max, k_max));
    }
    return points[idx];
  };
  SpecialDegreeScan scan{kind, {}, N, 0, 0};
  for (int i = 0; i <= i_max; ++i) {
    const int k = static_cast<int>(special_exponent(kind, i));
    int degree = 0;
    for (int e = power_sum_degree_bound(F, k); e >= 1 && degree == 0; --e) {
      const std::uint64_t t_degree = static_cast<std::uint64_t>(e) * k;
      for (std::uint64_t idx = 0;; ++idx) {
        if (evaluate_power_sum(lf, F, point(idx), e, k) != lf.zero()) {
          degree = e;
          break;
        }
        if (idx + 1 > t_degree) {
          ++scan.certified_zeros;
          break;
        }
      }
    }
    scan.degrees.push_back(degree);
  }
  scan.points_used = static_cast<int>(points.size());
  return scan;
}

bool VadicReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const VadicRow& r) { return r.ok; });
}

VadicReport vadic_congruence_check(const FieldPtr& field, long long i, long long j, int M, int e_max,
                                   const DeskBounds& bounds) {
  if (M < 0 || e_max < 0) throw Error(Errc::invalid_argument, "vadic check needs M >= 0 and e_max >= 0");
  const unsigned p = field->p();
  long long pm = 1;
  for (int t = 0; t < M; ++t) pm *= p;
  if (((i - j) % pm + pm) % pm != 0) {
    throw Error(Errc::invalid_argument, std::to_string(i) + " and " + std::to_string(j) + " are not congruent mod " +
                                            std::to_string(p) + "^" + std::to_string(M));
  }
  VadicReport report{i, j, M, static_cast<int>(std::max<long long>(2 * pm, pm + 8)), {}};
  const int wp = report.working_precision;
  for (int e = 0; e <= e_max; ++e) {
    const std::uint64_t count = checked_count(field->r(), e, bounds.max_enumeration, "v-adic congruence");
    LaurentSeries si = LaurentSeries::zero(field, wp), sj = LaurentSeries::zero(field, wp);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const Poly n = Poly::monic_from_index(field, e, idx);
      // n<n>^y = theta^e <n>^{y+1}; the common theta^e is dropped.
      const LaurentSeries unit = (LaurentSeries::from_poly(n) * LaurentSeries::theta_power(field, -e)).truncated(wp);
      si = si + one_unit_pow(unit, PAdicInt::exact(i + 1), wp);
      sj = sj + one_unit_pow(unit, PAdicInt::exact(j + 1), wp);
    }
    VadicRow row{e, si.agreement(sj), static_cast<int>(pm), false};
    row.ok = row.agreement >= row.required;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace drinfeld
