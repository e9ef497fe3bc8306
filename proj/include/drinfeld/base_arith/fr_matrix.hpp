// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "drinfeld/base_arith/field.hpp"

namespace drinfeld {

using FrVector = std::vector<Fq>;

// Dense matrix over F_r, row major.
class FrMatrix {
 public:
  FrMatrix() = default;
  FrMatrix(FieldPtr field, int rows, int cols);
  static FrMatrix identity(FieldPtr field, int n);
  // Matrix whose columns are the given vectors.
  static FrMatrix from_columns(FieldPtr field, int rows, const std::vector<FrVector>& cols);

  const FieldPtr& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Fq operator()(int i, int j) const noexcept { return a_[i * cols_ + j]; }
  Fq& operator()(int i, int j) noexcept { return a_[i * cols_ + j]; }
  FrVector column(int j) const;

  FrMatrix operator*(const FrMatrix& o) const;
  FrMatrix operator+(const FrMatrix& o) const;
  FrMatrix operator-(const FrMatrix& o) const;
  FrVector apply(std::span<const Fq> v) const;
  FrMatrix pow(std::uint64_t e) const;
  bool is_zero() const noexcept;

  int rank() const;
  // Basis of the right null space, in reduced echelon order (free variables
  // ascending), so the result is deterministic.
  std::vector<FrVector> kernel() const;
  std::optional<FrVector> solve(std::span<const Fq> b) const;

  friend bool operator==(const FrMatrix& a, const FrMatrix& b) noexcept;

 private:
  FieldPtr field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Fq> a_;
};

// Reduces the matrix in place to reduced row echelon form; returns pivot columns.
std::vector<int> row_reduce(FrMatrix& m);

}  // namespace drinfeld
