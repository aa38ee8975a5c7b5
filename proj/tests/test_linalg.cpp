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

#include <random>

#include "doctest.h"
#include "mres/linalg.hpp"
#include "mres/oracles.hpp"

using namespace mres;

namespace {

Matrix<Integer> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound,
                              double density = 1.0) {
  std::uniform_int_distribution<int> v(-bound, bound);
  std::bernoulli_distribution keep(density);
  Matrix<Integer> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) m(i, j) = v(rng);
  return m;
}

Matrix<ParamPoly> generic_matrix(std::size_t n, ParamSpace* names) {
  std::vector<std::string> ns;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ns.push_back("m_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  *names = ParamSpace(ns);
  Matrix<ParamPoly> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ParamPoly::variable(static_cast<int>(n * n), static_cast<int>(i * n + j));
  return m;
}

}  // namespace

TEST_CASE("Bareiss agrees with rational elimination on random integer matrices") {
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n <= 9; ++n)
    for (int k = 0; k < 20; ++k) {
      auto m = random_matrix(rng, n, n, 20, k % 2 ? 0.4 : 1.0);
      CHECK(Rational(bareiss_det(m)) == oracle::gauss_det(m));
    }
}

TEST_CASE("empty, singular and non-square matrices") {
  CHECK(bareiss_det(Matrix<Integer>()) == 1);
  Matrix<Integer> s(3, 3);
  s(0, 0) = 1;
  s(1, 0) = 2;
  s(2, 2) = 5;
  CHECK(bareiss_det(s) == 0);
  CHECK_THROWS_AS(bareiss_det(Matrix<Integer>(2, 3)), InvalidArgument);
}

TEST_CASE("symbolic determinant matches cofactor expansion") {
  for (std::size_t n = 1; n <= 4; ++n) {
    ParamSpace names;
    auto m = generic_matrix(n, &names);
    auto d = bareiss_det(m);
    CHECK(d == cofactor_det(m));
    // n! terms, each of coefficient +-1.
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    CHECK(d.size() == fact);
  }
}

TEST_CASE("work budget") {
  ParamSpace names;
  auto m = generic_matrix(5, &names);
  CHECK_THROWS_AS(bareiss_det(m, 50), SymbolicBudgetExceeded);
  CHECK(bareiss_det(m, 100000000) == cofactor_det(m));
}

TEST_CASE("rank over the fraction field") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 40; ++k) {
    const std::size_t r = 1 + static_cast<std::size_t>(k % 4);
    auto a = random_matrix(rng, 6, r, 5), b = random_matrix(rng, r, 7, 5);
    auto m = a * b;
    Matrix<Rational> q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
    CHECK(rank_over_fractions(m) == oracle::gauss_rank(q));
    CHECK(rank_over_fractions(m) <= r);
  }
  ParamSpace names;
  auto g = generic_matrix(3, &names);
  CHECK(rank_over_fractions(g) == 3);
}

TEST_CASE("characteristic polynomial") {
  Matrix<Integer> m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 3;
  m(1, 1) = 4;
  CHECK(berkowitz_charpoly(m) == std::vector<Integer>{-2, -5, 1});
  CHECK(berkowitz_charpoly(Matrix<Integer>()) == std::vector<Integer>{1});
  std::mt19937_64 rng(13);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto a = random_matrix(rng, n, n, 9);
    auto c = berkowitz_charpoly(a);
    REQUIRE(c.size() == n + 1);
    // c(0) = det(-A) and c at s = 2 is det(2I - A).
    Integer sign = n % 2 ? -1 : 1;
    CHECK(c[0] == sign * bareiss_det(a));
    Matrix<Integer> shifted = a;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? 2 : 0) - a(i, j);
    Integer at2 = 0, pow = 1;
    for (const auto& x : c) {
      at2 += x * pow;
      pow *= 2;
    }
    CHECK(at2 == bareiss_det(shifted));
  }
}

TEST_CASE("labels round-trip through text") {
  std::vector<Label> ls{Label::monomial({1, 0, 2}), Label::dual({0, 1}), Label::multiple(2, {1, 0}),
                        Label::dual_multiple(3, {0, 0, 1}), Label::named("row7")};
  for (const auto& l : ls) CHECK(Label::parse(l.to_string()) == l);
  CHECK(Label::monomial({1, 0, 2}).to_string() == "X^[1,0,2]");
  CHECK(Label::dual_multiple(2, {1, 0}).to_string() == "(X^[1,0]*f2)*");
}

TEST_CASE("labeled submatrices and transposes") {
  LabeledMatrix<Integer> m;
  m.entries = Matrix<Integer>(2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.entries(i, j) = static_cast<long>(10 * i + j);
  m.row_labels = {Label::monomial({1, 0}), Label::monomial({0, 1})};
  m.col_labels = {Label::dual({0}), Label::multiple(1, {0}), Label::multiple(2, {0})};
  m.blocks = {1, 2, 2, 0};
  m.validate();
  auto s = submatrix(m, {Label::monomial({0, 1})}, {Label::multiple(2, {0}), Label::dual({0})});
  CHECK(s.entries(0, 0) == 12);
  CHECK(s.entries(0, 1) == 10);
  CHECK_THROWS_AS(submatrix(m, {Label::monomial({2, 0})}, {}), InvalidArgument);
  auto t = m.transposed();
  CHECK(t.entries(2, 1) == 12);
  CHECK(t.row_labels == m.col_labels);
  m.blocks = {2, 2, 2, 0};
  CHECK_THROWS_AS(m.validate(), InvalidArgument);
}
