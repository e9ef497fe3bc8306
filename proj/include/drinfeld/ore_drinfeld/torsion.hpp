// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "drinfeld/base_arith/bounds.hpp"
#include "drinfeld/ore_drinfeld/reduction.hpp"

namespace drinfeld {

// Monic g with phi(F_f) = A/(g), from the Krylov orbit of the first cyclic
// generator in index order.
Poly point_module_annihilator(const ReducedModule& phi, const DeskBounds& bounds = {});

// phi[v] inside F_{r^{d e}}, d = deg f, for the least e where the kernel of
// phi_v reaches dimension rank * deg v.
struct TorsionBasis {
  Poly v;
  int rank = 0;
  int extension_degree = 0;          // e
  ExtFieldPtr field;                 // F_{r^{d e}}
  GfElem theta_image;                // root of f used to embed F_f
  FrMatrix phi_T;                    // phi_T on the ambient field, power basis
  std::vector<GfElem> generators;    // A/v basis P_1..P_t
  std::vector<GfElem> fr_basis;      // phi_{T^k}(P_j), j major
  std::vector<GfElem> kernel;        // F_r basis of phi[v] from the kernel

  // phi_a(P).
  GfElem act(const Poly& a, const GfElem& P) const;
  // P^{r^{deg f}}.
  GfElem frobenius(const GfElem& P, int deg_f) const;
  // Coordinates over A/v of a torsion point in the generator basis.
  std::vector<Poly> coordinates(const GfElem& P) const;
};

TorsionBasis torsion_points(const ReducedModule& phi, const Poly& v, const DeskBounds& bounds = {});

// F_r basis of the rational v-torsion of phi over k. Supported when phi_v has
// polynomial coefficients and a constant leading coefficient, which makes
// every rational root a polynomial of bounded degree.
std::vector<RatFunc> rational_torsion(const KDrinfeldModule& phi, const Poly& v);

// Matrix over A/v of arithmetic Frobenius x -> x^{r^{deg f}} on phi[v]; column
// j is the image of generator j.
struct FrobeniusOnTorsion {
  Poly v;
  int rank = 0;
  std::vector<std::vector<Poly>> matrix;
  Poly trace() const;
  Poly det() const;
};

FrobeniusOnTorsion frobenius_on_torsion(const ReducedModule& phi, const Poly& v,
                                        const DeskBounds& bounds = {});
FrobeniusOnTorsion frobenius_on_torsion(const ReducedModule& phi, const TorsionBasis& torsion);

// Characteristic polynomial of Frobenius at a good prime f, determined by
// CRT over auxiliary primes. Rank 2: u^2 - a u + mu f; rank 1: u - a.
struct FrobeniusCharpoly {
  Poly prime;
  int rank = 0;
  Poly a;
  Fq mu{0};
  std::vector<Poly> aux_primes;
  Poly verification_prime;
  int twist_exponent = 0;
  // Inverse local factor as coefficients in u, low to high.
  std::vector<Poly> denominator() const;
};

FrobeniusCharpoly frobenius_charpoly(const KDrinfeldModule& phi, const Poly& f,
                                     const DeskBounds& bounds = {});

}  // namespace drinfeld
