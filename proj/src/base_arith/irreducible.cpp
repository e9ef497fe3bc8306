// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/base_arith/irreducible.hpp"

#include <algorithm>

#include "drinfeld/base_arith/error.hpp"

namespace drinfeld {
namespace {

std::uint64_t count_monics(const FieldPtr& field, int d, const DeskBounds& bounds) {
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) {
    n *= field->r();
    if (n > bounds.max_enumeration) {
      throw Error(Errc::bound_exceeded, "enumerating monic polynomials of degree " +
                                            std::to_string(d) + " over F_" +
                                            std::to_string(field->r()) +
                                            " exceeds max_enumeration=" +
                                            std::to_string(bounds.max_enumeration));
    }
  }
  return n;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^{r^k} mod f, by k successive r-th powers.
Poly frobenius_iterate(const Poly& f, int k) {
  Poly x = Poly::variable(f.field()) % f;
  for (int i = 0; i < k; ++i) x = powmod(x, f.field()->r(), f);
  return x;
}

}  // namespace

bool is_irreducible_trial(const Poly& f, const DeskBounds& bounds) {
  if (f.degree() < 1) return false;
  const Poly g = f.monic();
  for (int d = 1; d <= g.degree() / 2; ++d) {
    const std::uint64_t n = count_monics(g.field(), d, bounds);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
      if ((g % Poly::monic_from_index(g.field(), d, idx)).is_zero()) return false;
    }
  }
  return true;
}

bool is_irreducible_rabin(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly g = f.monic();
  const Poly x = Poly::variable(g.field());
  if (!(frobenius_iterate(g, n) == x % g)) return false;
  for (int q : prime_divisors(n)) {
    const Poly h = frobenius_iterate(g, n / q) - x;
    if (gcd(g, h).degree() != 0) return false;
  }
  return true;
}

std::vector<Poly> monic_irreducibles_of_degree(const FieldPtr& field, int d, const DeskBounds& bounds) {
  if (d < 1) throw Error(Errc::invalid_argument, "degree must be >= 1");
  const std::uint64_t n = count_monics(field, d, bounds);
  std::vector<Poly> out;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    Poly f = Poly::monic_from_index(field, d, idx);
    if (is_irreducible_trial(f, bounds)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Poly> monic_irreducibles(const FieldPtr& field, int d_max, const DeskBounds& bounds) {
  if (d_max < 1) throw Error(Errc::invalid_argument, "d_max must be >= 1");
  count_monics(field, d_max, bounds);
  std::vector<Poly> out;
  for (int d = 1; d <= d_max; ++d) {
    std::vector<Poly> layer = monic_irreducibles_of_degree(field, d, bounds);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Poly least_irreducible(const FieldPtr& field, int d) {
  for (std::uint64_t idx = 0;; ++idx) {
    Poly f = Poly::monic_from_index(field, d, idx);
    if (is_irreducible_rabin(f)) return f;
  }
}

std::vector<std::pair<Poly, int>> factor_monic(const Poly& n, const std::vector<Poly>& primes) {
  std::vector<std::pair<Poly, int>> out;
  Poly rest = n;
  for (const Poly& p : primes) {
    if (rest.degree() < p.degree()) break;
    int e = 0;
    for (;;) {
      DivMod qr = divmod(rest, p);
      if (!qr.rem.is_zero()) break;
      rest = std::move(qr.quot);
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (rest.degree() > 0) {
    throw Error(Errc::bound_exceeded, "prime list too short to factor " + n.to_string());
  }
  return out;
}

}  // namespace drinfeld
