// Copyright 2026 The mres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense exact linear algebra over integral domains.
//
// Matrix<C> is a plain row-major grid. LabeledMatrix<C> adds row and column
// labels naming the monomial, dual monomial or polynomial multiple each index
// stands for, plus the offsets of the blocks of a Macaulay-style layout.

#pragma once

#include <string>
#include <vector>

#include "mres/corering.hpp"

namespace mres {

template <class C>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, RingTraits<C>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<C>::one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  C& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const C& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<C> data_;
};

template <class C>
Matrix<C> operator*(const Matrix<C>& a, const Matrix<C>& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product dimension mismatch");
  Matrix<C> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) add_product(r(i, j), a(i, k), b(k, j));
    }
  return r;
}

struct Label {
  enum class Kind {
    Monomial,      // X^exps
    Dual,          // T_exps, dual monomial
    Multiple,      // X^exps * f_poly
    DualMultiple,  // dual of X^exps * f_poly
    Named,
  };

  Kind kind = Kind::Named;
  int poly = 0;  // 1-based for multiples, 0 otherwise
  ExpVec exps;
  std::string name;

  static Label monomial(ExpVec e) { return {Kind::Monomial, 0, std::move(e), {}}; }
  static Label dual(ExpVec e) { return {Kind::Dual, 0, std::move(e), {}}; }
  static Label multiple(int j, ExpVec e) { return {Kind::Multiple, j, std::move(e), {}}; }
  static Label dual_multiple(int j, ExpVec e) { return {Kind::DualMultiple, j, std::move(e), {}}; }
  static Label named(std::string s) { return {Kind::Named, 0, {}, std::move(s)}; }

  // "X^[1,0,2]", "T^[0,1]", "X^[1,0]*f2", "(X^[1,0]*f2)*", or the name.
  std::string to_string() const;
  static Label parse(const std::string& s);

  bool operator==(const Label& o) const = default;
};

// Block offsets of [Delta D; D' 0]: the first delta_cols columns are dual
// monomials, the remaining sylvester_cols are multiples; the first top_rows
// rows are monomials, the remaining dual_rows are dual multiples.
struct BlockLayout {
  std::size_t delta_cols = 0;
  std::size_t sylvester_cols = 0;
  std::size_t top_rows = 0;
  std::size_t dual_rows = 0;

  bool operator==(const BlockLayout& o) const = default;
};

template <class C>
struct LabeledMatrix {
  Matrix<C> entries;
  std::vector<Label> row_labels;
  std::vector<Label> col_labels;
  BlockLayout blocks;

  std::size_t rows() const noexcept { return entries.rows(); }
  std::size_t cols() const noexcept { return entries.cols(); }
  // Throws InvalidArgument when the grid and label counts or the block
  // layout disagree.
  void validate() const;
  LabeledMatrix transposed() const;
};

// Restricts m to the given labels, in the order given. Throws
// InvalidArgument for a label absent from m.
template <class C>
LabeledMatrix<C> submatrix(const LabeledMatrix<C>& m, const std::vector<Label>& rows,
                           const std::vector<Label>& cols);

// Fraction-free determinant with full pivoting. The empty matrix has
// determinant 1. A nonzero max_work bounds the estimated number of
// coefficient operations (term products for polynomials, bit products for
// numbers); exceeding it throws SymbolicBudgetExceeded before the step that
// would cross it.
template <class C>
C bareiss_det(Matrix<C> m, std::size_t max_work = 0);
template <class C>
C bareiss_det(const LabeledMatrix<C>& m, std::size_t max_work = 0) {
  return bareiss_det(m.entries, max_work);
}

// Rank over the field of fractions of C.
template <class C>
std::size_t rank_over_fractions(Matrix<C> m);

// Coefficients of det(sI - m), lowest degree first: result[k] multiplies s^k,
// result[size] = 1. Division-free.
template <class C>
std::vector<C> berkowitz_charpoly(const Matrix<C>& m);

// Cofactor expansion, for cross-checking small matrices.
template <class C>
C cofactor_det(const Matrix<C>& m);

}  // namespace mres
