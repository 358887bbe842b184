// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <optional>
#include <vector>

#include "qucell/error.hpp"
#include "qucell/scalar.hpp"

namespace qucell::detail {

using ScalarRow = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarRow>;

// Row-echelon accumulator over the scalar field for incremental rank /
// membership queries.  Rows are reduced against stored pivot rows on entry.
class RowEchelon {
 public:
  // Reduces `row` against the stored rows.  When a nonzero remainder is left
  // it is stored as a new pivot row and true is returned.
  bool add_row(ScalarRow row) {
    reduce(row);
    const std::optional<std::size_t> lead = leading_index(row);
    if (!lead) return false;
    const Scalar inv = row[*lead].inverse();
    for (auto& x : row) x *= inv;
    rows_.push_back(std::move(row));
    leads_.push_back(*lead);
    return true;
  }

  // True when `row` lies in the span of the stored rows.
  bool contains(ScalarRow row) const {
    reduce(row);
    return !leading_index(row).has_value();
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<ScalarRow> rows_;
  std::vector<std::size_t> leads_;

  void reduce(ScalarRow& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Scalar& c = row[leads_[k]];
      if (c.is_zero()) continue;
      const Scalar factor = c;  // pivot rows are normalized to leading 1
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!rows_[k][j].is_zero()) row[j] -= factor * rows_[k][j];
      }
    }
  }

  static std::optional<std::size_t> leading_index(const ScalarRow& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) return j;
    }
    return std::nullopt;
  }
};

// LU factorization with row pivoting over the scalar field; factors once,
// solves many right-hand sides exactly.
class LUSolver {
 public:
  explicit LUSolver(ScalarMat matrix) : lu_(std::move(matrix)) {
    const std::size_t n = lu_.size();
    perm_.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pivot = k;
      while (pivot < n && lu_[perm_[pivot]][k].is_zero()) ++pivot;
      if (pivot == n) fail(ErrorKind::consistency, "singular matrix in LU factorization");
      std::swap(perm_[k], perm_[pivot]);
      const Scalar inv = lu_[perm_[k]][k].inverse();
      for (std::size_t i = k + 1; i < n; ++i) {
        Scalar& entry = lu_[perm_[i]][k];
        if (entry.is_zero()) continue;
        entry *= inv;
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!lu_[perm_[k]][j].is_zero()) entry_sub(lu_[perm_[i]][j], entry, lu_[perm_[k]][j]);
        }
      }
    }
  }

  std::vector<Scalar> solve(std::vector<Scalar> rhs) const {
    const std::size_t n = lu_.size();
    std::vector<Scalar> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      Scalar acc = rhs[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) {
        if (!lu_[perm_[i]][j].is_zero()) acc -= lu_[perm_[i]][j] * y[j];
      }
      y[i] = std::move(acc);
    }
    std::vector<Scalar> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
      Scalar acc = y[ii];
      for (std::size_t j = ii + 1; j < n; ++j) {
        if (!lu_[perm_[ii]][j].is_zero()) acc -= lu_[perm_[ii]][j] * x[j];
      }
      x[ii] = acc / lu_[perm_[ii]][ii];
    }
    return x;
  }

 private:
  ScalarMat lu_;
  std::vector<std::size_t> perm_;

  static void entry_sub(Scalar& target, const Scalar& a, const Scalar& b) { target -= a * b; }
};

// Solves M x = rhs for a general (possibly non-square) matrix; returns
// nullopt when the system is inconsistent.  Free variables are set to zero.
inline std::optional<std::vector<Scalar>> solve_linear(ScalarMat m, std::vector<Scalar> rhs) {
  const std::size_t nrows = m.size();
  const std::size_t ncols = nrows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t pr = row;
    while (pr < nrows && m[pr][col].is_zero()) ++pr;
    if (pr == nrows) continue;
    std::swap(m[pr], m[row]);
    std::swap(rhs[pr], rhs[row]);
    const Scalar inv = m[row][col].inverse();
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    rhs[row] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      const Scalar f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
      rhs[i] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < nrows; ++i) {
    if (!rhs[i].is_zero()) return std::nullopt;
  }
  std::vector<Scalar> x(ncols, Scalar::zero());
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = rhs[k];
  return x;
}

}  // namespace qucell::detail
