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

#include <algorithm>

#include "doctest.h"
#include "mres/combinat.hpp"
#include "mres/oracles.hpp"

using namespace mres;

namespace {

std::vector<std::vector<int>> tuples(int n, int max_d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 1);
  while (true) {
    out.push_back(cur);
    int k = n - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == max_d) cur[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) return out;
    ++cur[static_cast<std::size_t>(k)];
  }
}

bool below(const ExpVec& g, const DegreeSystem& ds, int upto) {
  for (int k = 1; k <= upto; ++k)
    if (g[static_cast<std::size_t>(k - 1)] >= ds.d(k)) return false;
  return true;
}

}  // namespace

TEST_CASE("critical degree") {
  CHECK(critical_degree(DegreeSystem({1, 1, 2})) == 1);
  CHECK(critical_degree(DegreeSystem({1, 1, 2, 3})) == 3);
  CHECK(critical_degree(DegreeSystem({5})) == 4);
}

TEST_CASE("degree systems reject empty and nonpositive degrees") {
  CHECK_THROWS_AS(DegreeSystem({}), InvalidArgument);
  CHECK_THROWS_AS(DegreeSystem({1, 0}), InvalidArgument);
}

TEST_CASE("Hilbert function, ideal dimension and sizes") {
  const DegreeSystem ds({1, 1, 2});
  CHECK(hilbert_function(ds, 0) == 1);
  CHECK(hilbert_function(ds, 1) == 1);
  CHECK(hilbert_function(ds, 2) == 0);
  CHECK(hilbert_function(ds, -1) == 0);
  CHECK(ideal_dim(ds, 0) == 0);
  CHECK(ideal_dim(ds, 1) == 2);
  CHECK(ideal_dim(ds, 2) == 6);
  CHECK(rho_size(ds, 0) == 3);
  CHECK(rho_size(ds, 2) == 6);
  CHECK_THROWS_AS(rho_size(ds, -1), InvalidArgument);
  CHECK(rho_size(DegreeSystem({1, 1, 2, 3}), 2) == 12);
  const DegreeSystem five({4, 4, 4, 4, 4});
  CHECK(rho_size(five, minimal_t(five)) == 670);
  CHECK(rho_size(five, critical_degree(five) + 1) == 4845);
  for (const auto& degs : tuples(3, 4)) {
    const DegreeSystem d(degs);
    for (int t = critical_degree(d) + 1; t < critical_degree(d) + 4; ++t) CHECK(hilbert_function(d, t) == 0);
  }
}

TEST_CASE("Hilbert function agrees with enumeration and is symmetric") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& degs : tuples(n, 4)) {
      const DegreeSystem ds(degs);
      const int tn = critical_degree(ds);
      for (int t = 0; t <= tn; ++t) {
        CHECK(hilbert_function(ds, t) == oracle::count_reduced(degs, t));
        CHECK(hilbert_function(ds, t) == hilbert_function(ds, tn - t));
        CHECK(static_cast<std::int64_t>(reduced_basis(ds, t).size()) == hilbert_function(ds, t));
        CHECK(rho_size(ds, t) == rho_size(ds, tn - t));
        if (t >= 1 && t <= tn / 2) CHECK(hilbert_function(ds, t - 1) <= hilbert_function(ds, t));
      }
    }
}

TEST_CASE("rho at the critical degree") {
  // With every d_i >= 1, i(0) = 0, so rho(t_n) is the full monomial count.
  for (int n = 1; n <= 4; ++n)
    for (const auto& degs : tuples(n, 4)) {
      const DegreeSystem ds(degs);
      const int tn = critical_degree(ds);
      CHECK(rho_size(ds, tn) == binomial(n + tn - 1, n - 1));
      CHECK(ideal_dim(ds, tn) == binomial(n + tn - 1, n - 1) - 1);
    }
}

TEST_CASE("index sets for (1,1,2) at t = 2") {
  const DegreeSystem ds({1, 1, 2});
  auto s21 = stj_basis(ds, 2, 1);
  CHECK(s21.items == std::vector<ExpVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(etj_basis(ds, 2, 1).items == std::vector<ExpVec>{{0, 1, 0}});
  CHECK(et_rows(ds, 2).items == std::vector<ExpVec>{{1, 1, 0}});
  CHECK_THROWS_AS(stj_basis(ds, 2, 0), InvalidArgument);
  CHECK_THROWS_AS(stj_basis(ds, 2, 4), InvalidArgument);
}

TEST_CASE("index sets satisfy their predicates") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& degs : tuples(n, 3)) {
      const DegreeSystem ds(degs);
      const int tn = critical_degree(ds);
      for (int t = 0; t <= tn + 2; ++t) {
        std::int64_t stj_total = 0, etj_total = 0;
        for (int j = 1; j <= n; ++j) {
          auto s = stj_basis(ds, t, j);
          auto e = etj_basis(ds, t, j);
          stj_total += static_cast<std::int64_t>(s.size());
          etj_total += j < n ? static_cast<std::int64_t>(e.size()) : 0;
          if (j == n) CHECK(e.size() == 0);
          if (j == 1) CHECK(s.items == monomials_of_degree(n, t - ds.d(1)));
          for (const auto& g : s.items) {
            CHECK(total_degree(g) == t - ds.d(j));
            CHECK(below(g, ds, j - 1));
          }
          for (const auto& g : e.items) {
            CHECK(std::find(s.items.begin(), s.items.end(), g) != s.items.end());
            bool exceeds = false;
            for (int i = 1; i <= n; ++i)
              exceeds = exceeds || (i != j && g[static_cast<std::size_t>(i - 1)] >= ds.d(i));
            CHECK(exceeds);
          }
          CHECK(std::is_sorted(s.items.begin(), s.items.end(), [](const ExpVec& a, const ExpVec& b) {
            return monomial_cmp(a, b) < 0;
          }));
        }
        CHECK(stj_total == monomial_count(n, t) - hilbert_function(ds, t));
        CHECK(static_cast<std::int64_t>(et_rows(ds, t).size()) == etj_total);
      }
    }
}

TEST_CASE("determinantal range") {
  auto r = determinantal_range(DegreeSystem({1, 1, 2}));
  REQUIRE(r);
  CHECK(r->min == 0);
  CHECK(r->max == 1);
  // Order of the degrees does not matter.
  auto r2 = determinantal_range(DegreeSystem({2, 1, 1}));
  REQUIRE(r2);
  CHECK(r2->min == r->min);
  CHECK(r2->max == r->max);
  for (int d = 1; d <= 6; ++d) CHECK(determinantal_range(DegreeSystem({d, d, d})));
  CHECK_FALSE(determinantal_range(DegreeSystem(std::vector<int>(7, 3))));
  CHECK_FALSE(determinantal_range(DegreeSystem(std::vector<int>(9, 3))));
  auto one = determinantal_range(DegreeSystem({4}));
  REQUIRE(one);
  CHECK(one->contains(0));
  CHECK(one->contains(100));
}

TEST_CASE("minimal t") {
  const DegreeSystem a({1, 1, 2, 3});
  CHECK(minimal_t(a) == 1);
  CHECK(rho_size(a, 1) == 12);
  CHECK(rho_size(a, 2) == 12);
  CHECK(minimal_t(DegreeSystem({1, 1, 2})) == 0);
  auto s = size_summary(DegreeSystem({2, 2, 6}));
  CHECK(s.min_size == 21);
  CHECK(s.classical_size == 45);
  for (int n = 1; n <= 4; ++n)
    for (const auto& degs : tuples(n, 4)) {
      const DegreeSystem ds(degs);
      const auto best = rho_size(ds, minimal_t(ds));
      for (int t = 0; t <= critical_degree(ds) + 1; ++t) CHECK(best <= rho_size(ds, t));
    }
}

TEST_CASE("size ratio bound") {
  CHECK(size_ratio_bound(DegreeSystem({2, 2})) == Rational(3, 2));
  CHECK_THROWS_AS(size_ratio_bound(DegreeSystem({1, 1, 1})), InvalidArgument);
  const DegreeSystem ten(std::vector<int>(10, 3));
  const DegreeSystem twenty(std::vector<int>(20, 2));
  auto ratio = [](const DegreeSystem& ds) {
    auto s = size_summary(ds);
    return Rational(Integer(std::to_string(s.min_size)), Integer(std::to_string(s.classical_size)));
  };
  CHECK(ratio(ten) == Rational(175803, 14307150));
  CHECK(ratio(ten) <= size_ratio_bound(ten));
  CHECK(size_ratio_bound(ten) == 2 * Rational(512, 19683));
  CHECK(ratio(twenty) <= size_ratio_bound(twenty));
}

TEST_CASE("counts overflow loudly") {
  CHECK_THROWS_AS(binomial(200, 100), InvalidArgument);
  CHECK(binomial(5, 7) == 0);
  CHECK(monomial_count(3, -1) == 0);
}
