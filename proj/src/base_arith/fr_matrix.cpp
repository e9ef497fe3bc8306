// Copyright 2026 drinfeld-lseries contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
#include "drinfeld/base_arith/fr_matrix.hpp"

#include <utility>

#include "drinfeld/base_arith/error.hpp"

namespace drinfeld {

FrMatrix::FrMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols) {}

FrMatrix FrMatrix::identity(FieldPtr field, int n) {
  FrMatrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Fq{1};
  return m;
}

FrMatrix FrMatrix::from_columns(FieldPtr field, int rows, const std::vector<FrVector>& cols) {
  FrMatrix m(std::move(field), rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j) {
    if (static_cast<int>(cols[j].size()) != rows) {
      throw Error(Errc::invalid_argument, "column length does not match row count");
    }
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

FrVector FrMatrix::column(int j) const {
  FrVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

FrMatrix FrMatrix::operator*(const FrMatrix& o) const {
  if (cols_ != o.rows_) throw Error(Errc::invalid_argument, "matrix shape mismatch");
  const FiniteField& F = *field_;
  FrMatrix out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Fq a = (*this)(i, k);
      if (a.code == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out(i, j) = F.add(out(i, j), F.mul(a, o(k, j)));
    }
  }
  return out;
}

FrMatrix FrMatrix::operator+(const FrMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::invalid_argument, "matrix shape mismatch");
  FrMatrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->add(a_[i], o.a_[i]);
  return out;
}

FrMatrix FrMatrix::operator-(const FrMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::invalid_argument, "matrix shape mismatch");
  FrMatrix out(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_->sub(a_[i], o.a_[i]);
  return out;
}

FrVector FrMatrix::apply(std::span<const Fq> v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(Errc::invalid_argument, "vector length mismatch");
  const FiniteField& F = *field_;
  FrVector out(rows_);
  for (int i = 0; i < rows_; ++i) {
    Fq acc{0};
    const Fq* row = &a_[static_cast<std::size_t>(i) * cols_];
    for (int j = 0; j < cols_; ++j) {
      if (v[j].code != 0) acc = F.add(acc, F.mul(row[j], v[j]));
    }
    out[i] = acc;
  }
  return out;
}

FrMatrix FrMatrix::pow(std::uint64_t e) const {
  FrMatrix result = identity(field_, rows_);
  FrMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool FrMatrix::is_zero() const noexcept {
  for (Fq c : a_) {
    if (c.code != 0) return false;
  }
  return true;
}

std::vector<int> row_reduce(FrMatrix& m) {
  const FiniteField& F = *m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (m(i, col).code != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    const Fq inv = F.inv(m(row, col));
    for (int j = col; j < m.cols(); ++j) m(row, j) = F.mul(m(row, j), inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const Fq factor = m(i, col);
      if (factor.code == 0) continue;
      for (int j = col; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int FrMatrix::rank() const {
  FrMatrix copy(*this);
  return static_cast<int>(row_reduce(copy).size());
}

std::vector<FrVector> FrMatrix::kernel() const {
  FrMatrix red(*this);
  const std::vector<int> pivots = row_reduce(red);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FrVector> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    FrVector v(cols_);
    v[free] = Fq{1};
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = field_->neg(red(static_cast<int>(k), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FrVector> FrMatrix::solve(std::span<const Fq> b) const {
  if (static_cast<int>(b.size()) != rows_) throw Error(Errc::invalid_argument, "vector length mismatch");
  FrMatrix aug(field_, rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  const std::vector<int> pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  FrVector x(cols_);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(static_cast<int>(k), cols_);
  return x;
}

bool operator==(const FrMatrix& a, const FrMatrix& b) noexcept {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

}  // namespace drinfeld
