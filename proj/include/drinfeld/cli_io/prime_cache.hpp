// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/base_arith/bounds.hpp"
#include "drinfeld/base_arith/poly.hpp"

namespace drinfeld {

// On-disk tables of monic irreducibles, one file per (r, d):
//
//   # drinfeld prime table
//   r 9 = 3^2
//   d 2
//   count 36
//   crc32 7c1f0a3e
//   T^2+1
//   ...
//
// The checksum covers the prime lines. A missing, stale or corrupt file is
// recomputed and rewritten.
class PrimeCache {
 public:
  // No directory: every table is computed in memory.
  explicit PrimeCache(std::optional<std::filesystem::path> dir = std::nullopt);

  std::vector<Poly> primes_of_degree(const FieldPtr& field, int d, const DeskBounds& bounds = {});
  // Degrees 1..d_max in (degree, lex) order.
  std::vector<Poly> primes_up_to(const FieldPtr& field, int d_max, const DeskBounds& bounds = {});

  std::filesystem::path table_path(const FiniteField& field, int d) const;
  int hits() const noexcept { return hits_; }
  int misses() const noexcept { return misses_; }
  int repairs() const noexcept { return repairs_; }

  // Text of a table file for the given primes.
  static std::string render(const FiniteField& field, int d, const std::vector<Poly>& primes);
  // Parsed primes, or nullopt when the header or checksum does not match.
  static std::optional<std::vector<Poly>> parse(const FieldPtr& field, int d, const std::string& text);

 private:
  std::optional<std::filesystem::path> dir_;
  int hits_ = 0, misses_ = 0, repairs_ = 0;
};

}  // namespace drinfeld
