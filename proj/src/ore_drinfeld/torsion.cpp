// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/ore_drinfeld/torsion.hpp"

#include <optional>

#include "drinfeld/base_arith/irreducible.hpp"

namespace drinfeld {
namespace {

// Matrix of x -> sum c_i x^{r^i} on L in the power basis.
FrMatrix linear_map_matrix(const ExtField& L, const std::vector<GfElem>& coeffs) {
  const FieldPtr& F = L.base();
  const FrMatrix frob = L.frobenius_matrix();
  FrMatrix power = FrMatrix::identity(F, L.degree());
  FrMatrix total(F, L.degree(), L.degree());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) power = frob * power;
    if (coeffs[i].is_zero()) continue;
    total = total + L.multiplication_matrix(coeffs[i]) * power;
  }
  return total;
}

std::uint64_t checked_power(unsigned r, int d, const DeskBounds& bounds, const char* what) {
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) {
    n *= r;
    if (n > bounds.max_enumeration) {
      throw Error(Errc::bound_exceeded, std::string(what) + ": " + std::to_string(r) + "^" +
                                            std::to_string(d) + " exceeds max_enumeration=" +
                                            std::to_string(bounds.max_enumeration));
    }
  }
  return n;
}

// First root of f in L, enumerating the subfield F_{r^deg f} in index order
// over the kernel basis of Frob^{deg f} - 1.
GfElem embed_root(const Poly& f, const ExtFieldPtr& L, const DeskBounds& bounds) {
  const FieldPtr& F = L->base();
  const int d = f.degree();
  const FrMatrix fixed = L->frobenius_matrix().pow(d) - FrMatrix::identity(F, L->degree());
  const std::vector<FrVector> basis = fixed.kernel();
  const std::uint64_t count = checked_power(F->r(), d, bounds, "embedding the residue field");
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    FrVector v(L->degree());
    std::uint64_t rest = idx;
    for (const FrVector& b : basis) {
      const Fq digit{static_cast<std::uint8_t>(rest % F->r())};
      rest /= F->r();
      if (digit.code == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = F->add(v[k], F->mul(digit, b[k]));
    }
    GfElem a = L->from_coords(v);
    if (evaluate(f, a).is_zero()) return a;
  }
  throw Error(Errc::invalid_argument, f.to_string() + " has no root in " + L->describe());
}

std::vector<GfElem> embed_coefficients(const OrePoly<GfElem>& op, const GfElem& root) {
  std::vector<GfElem> out;
  for (const GfElem& c : op.coeffs()) out.push_back(evaluate(c.rep(), root));
  return out;
}

FrMatrix columns_of(const std::vector<GfElem>& elems, const ExtField& L) {
  std::vector<FrVector> cols;
  for (const GfElem& e : elems) cols.push_back(e.coords());
  return FrMatrix::from_columns(L.base(), L.degree(), cols);
}

}  // namespace

Poly point_module_annihilator(const ReducedModule& phi, const DeskBounds& bounds) {
  const ExtField& Ff = *phi.residue_field;
  const FieldPtr& F = Ff.base();
  const int d = Ff.degree();
  const std::uint64_t count = checked_power(F->r(), d, bounds, "point module enumeration");
  const FrMatrix A = linear_map_matrix(Ff, phi.module.phi_T().coeffs());
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::vector<FrVector> orbit{Ff.from_index(idx).coords()};
    for (int k = 1; k <= d; ++k) {
      const FrVector next = A.apply(orbit.back());
      const auto dep = FrMatrix::from_columns(F, d, orbit).solve(next);
      if (dep) {
        if (k < d) break;
        std::vector<Fq> g(k + 1);
        for (int j = 0; j < k; ++j) g[j] = F->neg((*dep)[j]);
        g[k] = Fq{1};
        return Poly(F, std::move(g));
      }
      orbit.push_back(next);
    }
  }
  throw Error(Errc::not_cyclic, "point module at " + phi.prime.to_string() +
                                    " has no cyclic generator; this contradicts the rank-1 prediction");
}

GfElem TorsionBasis::act(const Poly& a, const GfElem& P) const {
  const FieldPtr& F = field->base();
  FrVector acc(field->degree());
  const FrVector p = P.coords();
  for (int i = a.degree(); i >= 0; --i) {
    acc = phi_T.apply(acc);
    const Fq c = a.coeff(i);
    if (c.code == 0) continue;
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = F->add(acc[k], F->mul(c, p[k]));
  }
  return field->from_coords(acc);
}

GfElem TorsionBasis::frobenius(const GfElem& P, int deg_f) const { return P.frobenius(deg_f); }

std::vector<Poly> TorsionBasis::coordinates(const GfElem& P) const {
  const FieldPtr& F = field->base();
  const auto sol = columns_of(fr_basis, *field).solve(P.coords());
  if (!sol) throw Error(Errc::invalid_argument, "point is not in phi[" + v.to_string() + "]");
  const int n = v.degree();
  std::vector<Poly> out;
  for (int j = 0; j < rank; ++j) {
    std::vector<Fq> c(sol->begin() + j * n, sol->begin() + (j + 1) * n);
    out.push_back(Poly(F, std::move(c)));
  }
  return out;
}

TorsionBasis torsion_points(const ReducedModule& phi, const Poly& v, const DeskBounds& bounds) {
  const Poly& f = phi.prime;
  const FieldPtr& F = f.field();
  if (v == f) throw Error(Errc::invalid_argument, "auxiliary prime must differ from the reduction prime");
  if (!v.is_monic() || !is_irreducible_rabin(v)) throw Error(Errc::not_prime, v.to_string() + " is not a monic prime");
  const int d = f.degree();
  const int t = phi.module.rank();
  const int n = v.degree();
  const OrePoly<GfElem> phi_v = phi.module.action(v);
  for (int e = 1;; ++e) {
    if (d * e > bounds.max_extension_degree) {
      throw Error(Errc::bound_exceeded, "phi[" + v.to_string() + "] at " + f.to_string() +
                                            " is not split over degree <= max_extension_degree=" +
                                            std::to_string(bounds.max_extension_degree));
    }
    ExtFieldPtr L = canonical_extension(F, d * e, bounds);
    const GfElem root = embed_root(f, L, bounds);
    const FrMatrix M = linear_map_matrix(*L, embed_coefficients(phi_v, root));
    const std::vector<FrVector> ker = M.kernel();
    if (static_cast<int>(ker.size()) < t * n) continue;

    TorsionBasis out;
    out.v = v;
    out.rank = t;
    out.extension_degree = e;
    out.field = L;
    out.theta_image = root;
    out.phi_T = linear_map_matrix(*L, embed_coefficients(phi.module.phi_T(), root));
    for (const FrVector& k : ker) out.kernel.push_back(L->from_coords(k));
    std::vector<FrVector> span;
    for (const FrVector& cand : ker) {
      if (static_cast<int>(span.size()) == t * n) break;
      std::vector<FrVector> trial = span;
      trial.push_back(cand);
      if (FrMatrix::from_columns(F, L->degree(), trial).rank() <= static_cast<int>(span.size())) continue;
      out.generators.push_back(L->from_coords(cand));
      FrVector w = cand;
      for (int k = 0; k < n; ++k) {
        span.push_back(w);
        out.fr_basis.push_back(L->from_coords(w));
        w = out.phi_T.apply(w);
      }
    }
    if (FrMatrix::from_columns(F, L->degree(), span).rank() != t * n) {
      throw Error(Errc::not_cyclic, "torsion orbit basis is degenerate at v=" + v.to_string());
    }
    return out;
  }
}

std::vector<RatFunc> rational_torsion(const KDrinfeldModule& phi, const Poly& v) {
  const FieldPtr& F = v.field();
  const OrePoly<RatFunc> phi_v = phi.action(v);
  const int top = phi_v.degree();
  for (const RatFunc& c : phi_v.coeffs()) {
    if (!c.is_polynomial()) throw Error(Errc::unsupported, "rational torsion needs integral phi_v");
  }
  if (!phi_v.coeff(top).is_constant()) {
    throw Error(Errc::unsupported, "rational torsion needs a constant leading coefficient");
  }
  const long long r = F->r();
  long long rtop = 1;
  for (int i = 0; i < top; ++i) rtop *= r;
  long long dmax = 0;
  long long ri = 1;
  for (int i = 0; i < top; ++i, ri *= r) {
    const RatFunc& c = phi_v.coeff(i);
    if (c.is_zero()) continue;
    dmax = std::max(dmax, c.num().degree() / (rtop - ri));
  }
  std::vector<Poly> images;
  int rows = 0;
  for (long long j = 0; j <= dmax; ++j) {
    const RatFunc x(Poly::monomial(F, Fq{1}, static_cast<int>(j)));
    images.push_back(phi_v.evaluate(x).num());
    rows = std::max(rows, images.back().degree() + 1);
  }
  FrMatrix m(F, std::max(rows, 1), static_cast<int>(images.size()));
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (int k = 0; k <= images[j].degree(); ++k) m(k, static_cast<int>(j)) = images[j].coeff(k);
  }
  std::vector<RatFunc> out;
  for (const FrVector& kv : m.kernel()) out.emplace_back(Poly(F, kv));
  return out;
}

Poly FrobeniusOnTorsion::trace() const {
  Poly acc(v.field());
  for (int i = 0; i < rank; ++i) acc += matrix[i][i];
  return acc % v;
}

Poly FrobeniusOnTorsion::det() const {
  if (rank == 1) return matrix[0][0] % v;
  if (rank == 2) return (matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]) % v;
  throw Error(Errc::unsupported, "determinant only for rank <= 2");
}

FrobeniusOnTorsion frobenius_on_torsion(const ReducedModule& phi, const TorsionBasis& torsion) {
  const int d = phi.prime.degree();
  FrobeniusOnTorsion out;
  out.v = torsion.v;
  out.rank = torsion.rank;
  out.matrix.assign(torsion.rank, std::vector<Poly>(torsion.rank, Poly(torsion.v.field())));
  for (int j = 0; j < torsion.rank; ++j) {
    const std::vector<Poly> col = torsion.coordinates(torsion.frobenius(torsion.generators[j], d));
    for (int i = 0; i < torsion.rank; ++i) out.matrix[i][j] = col[i];
  }
  return out;
}

FrobeniusOnTorsion frobenius_on_torsion(const ReducedModule& phi, const Poly& v, const DeskBounds& bounds) {
  return frobenius_on_torsion(phi, torsion_points(phi, v, bounds));
}

std::vector<Poly> FrobeniusCharpoly::denominator() const {
  const FieldPtr& F = prime.field();
  std::vector<Poly> out{Poly::constant(F, Fq{1}), -a};
  if (rank == 2) out.push_back(prime.scaled(mu));
  return out;
}

FrobeniusCharpoly frobenius_charpoly(const KDrinfeldModule& phi, const Poly& f, const DeskBounds& bounds) {
  auto reduced = reduce_mod_prime(phi, f);
  const int t = phi.rank();
  if (auto* bad = std::get_if<BadReduction>(&reduced)) {
    if (t >= 2) {
      throw Error(Errc::unsupported, "rank-" + std::to_string(t) + " bad prime " + f.to_string() +
                                         ": maximal models are not computed");
    }
    throw Error(Errc::bad_prime, bad->reason);
  }
  if (t > 2) throw Error(Errc::unsupported, "Frobenius charpoly only for rank <= 2");
  const ReducedModule& red = std::get<ReducedModule>(reduced);
  const FieldPtr& F = f.field();
  const int d = f.degree();

  // Auxiliary primes by (degree, lex), skipping f.
  int aux_deg = 1;
  std::vector<Poly> layer;
  std::size_t layer_pos = 0;
  auto next_aux = [&]() -> Poly {
    for (;;) {
      if (layer_pos < layer.size()) {
        const Poly& v = layer[layer_pos++];
        if (!(v == f)) return v;
        continue;
      }
      layer = monic_irreducibles_of_degree(F, aux_deg++, bounds);
      layer_pos = 0;
    }
  };

  // Auxiliary primes whose torsion does not split within the extension bound
  // are skipped; the enumeration bound still ends the search.
  auto next_usable = [&]() -> std::pair<Poly, FrobeniusOnTorsion> {
    for (;;) {
      const Poly v = next_aux();
      try {
        return {v, frobenius_on_torsion(red, v, bounds)};
      } catch (const Error& e) {
        if (e.code() != Errc::bound_exceeded) throw;
      }
    }
  };

  FrobeniusCharpoly out;
  out.prime = f;
  out.rank = t;
  out.twist_exponent = red.twist_exponent;
  std::optional<Fq> mu;
  auto unit_part = [&](const Poly& value, const Poly& v) {
    const Poly u = mulmod(value, invmod(f, v), v);
    if (u.degree() != 0) {
      throw Error(Errc::inconsistent_crt, "Frobenius determinant at " + f.to_string() + " is " + value.to_string() +
                                              " mod " + v.to_string() + ", not a constant multiple of f");
    }
    return u.coeff(0);
  };
  auto record_mu = [&](Fq m, const Poly& v) {
    if (mu && *mu != m) {
      throw Error(Errc::inconsistent_crt, "unit factor differs at auxiliary prime " + v.to_string());
    }
    mu = m;
  };

  if (t == 1) {
    for (int k = 0; k < 3; ++k) {
      const auto [v, m] = next_usable();
      record_mu(unit_part(m.det(), v), v);
      if (k < 2) {
        out.aux_primes.push_back(v);
      } else {
        out.verification_prime = v;
      }
    }
    out.a = f.scaled(*mu);
    out.mu = *mu;
    return out;
  }

  CrtState acc{Poly(F), Poly::constant(F, Fq{1})};
  const int need = d / 2 + 1;
  while (acc.modulus.degree() < need) {
    const auto [v, m] = next_usable();
    record_mu(unit_part(m.det(), v), v);
    acc = crt_combine(acc, m.trace(), v);
    out.aux_primes.push_back(v);
  }
  if (acc.value.degree() > d / 2) {
    throw Error(Errc::inconsistent_crt, "trace of Frobenius at " + f.to_string() + " reconstructs to " +
                                            acc.value.to_string() + ", above the degree bound");
  }
  const auto [check, m] = next_usable();
  record_mu(unit_part(m.det(), check), check);
  if (!((acc.value % check) == m.trace())) {
    throw Error(Errc::inconsistent_crt, "trace at verification prime " + check.to_string() + " disagrees");
  }
  out.verification_prime = check;
  out.a = acc.value;
  out.mu = *mu;
  return out;
}

}  // namespace drinfeld
