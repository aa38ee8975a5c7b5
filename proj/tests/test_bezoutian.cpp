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
#include "mres/bezoutian.hpp"
#include "mres/oracles.hpp"

using namespace mres;

namespace {

MPoly<Integer> var(int nvars, int index) { return MPoly<Integer>::variable(nvars, index); }

// Embeds a polynomial in X_1..X_n into 2n variables, in the X block or the Y block.
MPoly<Integer> embed(const MPoly<Integer>& p, bool y_block) {
  const int n = p.nvars();
  std::vector<std::pair<ExpVec, Integer>> terms;
  for (std::size_t k = 0; k < p.size(); ++k) {
    ExpVec e(2 * static_cast<std::size_t>(n), 0);
    auto a = p.exponents(k);
    for (int v = 0; v < n; ++v) e[static_cast<std::size_t>(y_block ? n + v : v)] = a[static_cast<std::size_t>(v)];
    terms.emplace_back(std::move(e), p.coeff(k));
  }
  return MPoly<Integer>::from_terms(2 * n, std::move(terms));
}

std::vector<Integer> concat(std::vector<Integer> a, const std::vector<Integer>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("derivative") {
  auto p = MPoly<Integer>::from_terms(2, {{{2, 1}, Integer(3)}, {{0, 4}, Integer(-1)}});
  CHECK(derivative(p, 0) == MPoly<Integer>::from_terms(2, {{{1, 1}, Integer(6)}}));
  CHECK(derivative(p, 1) == MPoly<Integer>::from_terms(2, {{{2, 0}, Integer(3)}, {{0, 3}, Integer(-4)}}));
  CHECK_THROWS_AS(derivative(p, 2), InvalidArgument);
}

TEST_CASE("incremental quotients telescope to f_i(X) - f_i(Y)") {
  std::mt19937_64 rng(21);
  for (const auto& degs : std::vector<std::vector<int>>{{2, 3}, {1, 1, 2}, {2, 2, 2}, {1, 2, 1, 3}}) {
    const DegreeSystem ds(degs);
    const int n = ds.n();
    auto sys = oracle::random_system(ds, rng, 9);
    for (int i = 1; i <= n; ++i) {
      MPoly<Integer> sum(2 * n);
      for (int j = 1; j <= n; ++j) {
        auto th = incremental_quotient(sys, i, j);
        CHECK((th.is_zero() || (th.is_homogeneous() && th.degree() == ds.d(i) - 1)));
        sum += (var(2 * n, j - 1) - var(2 * n, n + j - 1)) * th;
      }
      CHECK(sum == embed(sys.f(i), false) - embed(sys.f(i), true));
    }
  }
}

TEST_CASE("Bezoutian degree, diagonal and Y = 0 restriction") {
  std::mt19937_64 rng(22);
  for (const auto& degs : std::vector<std::vector<int>>{{3}, {2, 2}, {1, 1, 2}, {2, 1, 3}, {1, 1, 1, 2}}) {
    const DegreeSystem ds(degs);
    const int n = ds.n();
    auto sys = oracle::random_system(ds, rng, 9);
    auto bez = bezoutian(sys);
    REQUIRE(bez.nvars() == 2 * n);
    CHECK(bez.is_homogeneous());
    CHECK(bez.degree() == critical_degree(ds));
    auto jac = jacobian(sys);
    auto d0 = delta_zero(sys);
    for (int k = 0; k < 5; ++k) {
      auto p = oracle::random_values(static_cast<std::size_t>(n), rng, 7);
      CHECK(oracle::evaluate(bez, concat(p, p)) == oracle::evaluate(jac, p));
      CHECK(oracle::evaluate(bez, concat(p, std::vector<Integer>(p.size(), 0))) == oracle::evaluate(d0, p));
    }
  }
}

TEST_CASE("Jacobian of the monomial system") {
  const DegreeSystem ds({2, 3, 1});
  auto j = jacobian(monomial_system<Integer>(ds));
  CHECK(j == MPoly<Integer>::from_terms(3, {{{1, 2, 0}, Integer(6)}}));
}

TEST_CASE("swap_xy and symmetry") {
  std::mt19937_64 rng(23);
  // One variable: the Bezoutian is the symmetric divided difference.
  auto uni = oracle::random_system(DegreeSystem({4}), rng, 9);
  auto b1 = bezoutian(uni);
  CHECK(swap_xy(b1) == b1);
  // Several variables: swapping is an involution, but the Bezoutian is in
  // general not symmetric.
  auto sys = oracle::random_system(DegreeSystem({1, 1, 2}), rng, 9);
  auto b3 = bezoutian(sys);
  CHECK(swap_xy(swap_xy(b3)) == b3);
  CHECK_FALSE(swap_xy(b3) == b3);
  CHECK_THROWS_AS(swap_xy(MPoly<Integer>(3)), InvalidArgument);
}

TEST_CASE("Delta slices rebuild the Bezoutian") {
  std::mt19937_64 rng(24);
  for (const auto& degs : std::vector<std::vector<int>>{{2, 2}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}}) {
    const DegreeSystem ds(degs);
    const int n = ds.n(), tn = critical_degree(ds);
    auto sys = oracle::random_system(ds, rng, 9);
    auto bez = bezoutian(sys);
    MPoly<Integer> rebuilt(2 * n);
    for (int t = 0; t <= tn; ++t) {
      auto slices = delta_slices(bez, ds, t);
      CHECK(static_cast<std::int64_t>(slices.size()) == monomial_count(n, tn - t));
      for (const auto& [g, p] : slices) {
        CHECK((p.is_zero() || (p.is_homogeneous() && p.degree() == t)));
        ExpVec ye(2 * static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) ye[static_cast<std::size_t>(n + v)] = g[static_cast<std::size_t>(v)];
        rebuilt += embed(p, false) * MPoly<Integer>::term(ye, Integer(1));
      }
      auto dm = delta_matrix(bez, ds, t);
      CHECK(static_cast<std::int64_t>(dm.entries.rows()) == monomial_count(n, t));
      CHECK(static_cast<std::int64_t>(dm.entries.cols()) == monomial_count(n, tn - t));
    }
    CHECK(rebuilt == bez);
    CHECK_THROWS_AS(delta_slices(bez, ds, tn + 1), InvalidArgument);
    CHECK_THROWS_AS(delta_slices(bez, ds, -1), InvalidArgument);
  }
}

TEST_CASE("Delta slices of the generic (1,1,2) system") {
  ParamSpace names;
  const DegreeSystem ds({1, 1, 2});
  auto sys = generic_system(ds, &names);
  CHECK(names.size() == 12);
  CHECK(names.name(6) == "a_3_1");
  auto c = [&](int i, ExpVec e) { return sys.f(i).coeff_of(e); };
  ParamPoly m12 = c(1, {1, 0, 0}) * c(2, {0, 1, 0}) - c(1, {0, 1, 0}) * c(2, {1, 0, 0});
  auto slices = delta_slices(bezoutian(sys), ds, 0);
  REQUIRE(slices.size() == 3);
  CHECK(slices[2].first == ExpVec{0, 0, 1});
  CHECK(slices[2].second.coeff_of(ExpVec{0, 0, 0}) == c(3, {0, 0, 2}) * m12);
}

TEST_CASE("specialization of the generic system") {
  ParamSpace names;
  const DegreeSystem ds({1, 2});
  auto sys = generic_system(ds, &names);
  std::vector<Integer> v{1, 2, 3, 4, 5};
  auto s = specialize_system(sys, v);
  CHECK(s.f(1) == MPoly<Integer>::from_terms(2, {{{1, 0}, Integer(1)}, {{0, 1}, Integer(2)}}));
  CHECK(s.f(2).coeff_of(ExpVec{2, 0}) == 3);
  CHECK(s.f(2).coeff_of(ExpVec{1, 1}) == 4);
  CHECK(s.f(2).coeff_of(ExpVec{0, 2}) == 5);
}
