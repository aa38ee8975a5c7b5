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
#include <random>

#include "doctest.h"
#include "mres/macaulay.hpp"
#include "mres/oracles.hpp"

using namespace mres;

namespace {

// ds as f(x) = sum c_j x^j, lowest first, from a binary form in X1, X2.
std::vector<Rational> dehomogenize(const MPoly<Integer>& f, int d) {
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) c[static_cast<std::size_t>(j)] = Rational(f.coeff_of(ExpVec{j, d - j}));
  return c;
}

std::vector<Rational> trim(std::vector<Rational> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// p restricted to the line base + s * dir, as coefficients in s.
std::vector<Rational> restrict_to_line(const ParamPoly& p, const std::vector<Integer>& base,
                                       const std::vector<Integer>& dir) {
  const int deg = std::max(p.degree(), 0);
  std::vector<Rational> xs, ys;
  for (int s = 0; s <= deg; ++s) {
    std::vector<Integer> pt(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) pt[k] = base[k] + s * dir[k];
    xs.push_back(Rational(s));
    ys.push_back(Rational(specialize(p, pt)));
  }
  return trim(oracle::interpolate(xs, ys));
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

const std::vector<std::vector<int>> kSmall{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}};

}  // namespace

TEST_CASE("assemblies are square of size rho(t)") {
  for (int n = 1; n <= 4; ++n) {
    const int max_d = n == 4 ? 3 : 4;
    std::vector<int> d(static_cast<std::size_t>(n), 1);
    while (true) {
      const DegreeSystem ds(d);
      auto sys = monomial_system<Integer>(ds);
      const int tn = critical_degree(ds);
      for (int t = 0; t <= tn + 1; ++t) {
        auto a = build_assembly(sys, t);
        CHECK(a.matrix.entries.rows() == a.matrix.entries.cols());
        CHECK(static_cast<std::int64_t>(a.matrix.entries.rows()) == rho_size(ds, t));
        CHECK(a.e_rows.size() == a.e_cols.size());
        CHECK(a.e_dual_rows.size() == a.e_dual_cols.size());
        // On the monomial system every block is a signed permutation.
        if (a.matrix.entries.rows() <= 120) {
          CHECK(abs(bareiss_det(a.matrix)) == 1);
          CHECK(abs(bareiss_det(a.extraneous())) == 1);
        }
      }
      std::size_t k = 0;
      while (k < d.size() && d[k] == max_d) d[k++] = 1;
      if (k == d.size()) break;
      ++d[k];
    }
  }
}

TEST_CASE("the monomial system has resultant 1 at every t") {
  for (const auto& degs : kSmall) {
    const DegreeSystem ds(degs);
    for (int t = 0; t <= critical_degree(ds) + 1; ++t) {
      CHECK(resultant_specialized(monomial_system<Integer>(ds), t).value == 1);
      CHECK(resultant_generic(monomial_system<ParamPoly>(ds), t).value == RingTraits<ParamPoly>::one());
      CHECK(normalization_sign(ds, t) * bareiss_det(build_assembly(monomial_system<Integer>(ds), t).matrix) *
                bareiss_det(build_assembly(monomial_system<Integer>(ds), t).extraneous()) ==
            1);
    }
  }
}

TEST_CASE("generic quotients are exact and independent of t") {
  for (const auto& degs : kSmall) {
    const DegreeSystem ds(degs);
    auto sys = generic_system(ds);
    auto r0 = resultant_generic(sys, 0).value;
    auto deg = coefficient_degrees(r0, ds);
    for (int i = 1; i <= ds.n(); ++i) {
      CHECK(deg[static_cast<std::size_t>(i - 1)].first == ds.degree_product_except(i));
      CHECK(deg[static_cast<std::size_t>(i - 1)].second == ds.degree_product_except(i));
    }
    for (int t = 1; t <= critical_degree(ds) + 1; ++t) CHECK(resultant_generic(sys, t).value == r0);
    CHECK(classical_macaulay(sys).value == r0);
  }
}

TEST_CASE("binary forms agree with the Sylvester resultant") {
  std::mt19937_64 rng(31);
  for (const auto& degs : std::vector<std::vector<int>>{{1, 1}, {1, 3}, {2, 2}, {3, 2}, {2, 4}}) {
    const DegreeSystem ds(degs);
    auto e = monomial_system<Integer>(ds);
    const Rational sign = oracle::sylvester_resultant(dehomogenize(e.f(1), degs[0]), dehomogenize(e.f(2), degs[1]));
    REQUIRE(abs(sign) == 1);
    for (int k = 0; k < 10; ++k) {
      auto sys = oracle::random_system(ds, rng, 9);
      Rational want = sign * oracle::sylvester_resultant(dehomogenize(sys.f(1), degs[0]), dehomogenize(sys.f(2), degs[1]));
      for (int t = 0; t <= critical_degree(ds) + 1; ++t) CHECK(Rational(resultant_specialized(sys, t).value) == want);
    }
  }
}

TEST_CASE("resultants are invariant under reordering up to the known sign") {
  std::mt19937_64 rng(32);
  const DegreeSystem ds({1, 1, 2});
  for (int k = 0; k < 10; ++k) {
    auto sys = oracle::random_system(ds, rng, 9);
    auto r = resultant_specialized(sys).value;
    // Both transpositions act by (-1)^(d1 d2 d3).
    CHECK(resultant_specialized(sys.permuted_vars({1, 0, 2})).value == r);
    CHECK(resultant_specialized(sys.permuted_polys({1, 0, 2})).value == r);
    auto lin = oracle::random_system(DegreeSystem({1, 1, 1}), rng, 9);
    auto rl = resultant_specialized(lin).value;
    CHECK(resultant_specialized(lin.permuted_vars({1, 0, 2})).value == -rl);
    CHECK(resultant_specialized(lin.permuted_polys({2, 0, 1})).value == rl);
  }
}

TEST_CASE("maximal minors of the unrestricted map") {
  ParamSpace names;
  const DegreeSystem ds({1, 1, 2});
  auto sys = generic_system(ds, &names);
  const ParamPoly res = resultant_generic(sys, 0).value;

  auto p0 = psi_tilde(sys, 0);
  REQUIRE(p0.entries.rows() == p0.entries.cols());
  auto d0 = bareiss_det(p0.entries);
  CHECK((d0 == res || d0 == -res));

  auto p2 = psi_tilde(sys, 2);
  const auto& m = p2.entries;
  const bool wide = m.rows() <= m.cols();
  const std::size_t small = std::min(m.rows(), m.cols()), big = std::max(m.rows(), m.cols());
  CHECK(small < big);
  std::vector<ParamPoly> quotients;
  for (const auto& pick : subsets(big, small)) {
    Matrix<ParamPoly> sub(small, small);
    for (std::size_t i = 0; i < small; ++i)
      for (std::size_t j = 0; j < small; ++j) sub(i, j) = wide ? m(i, pick[j]) : m(pick[i], j);
    auto minor = bareiss_det(sub);
    if (minor.is_zero()) continue;
    quotients.push_back(ParamPoly::divide(minor, res));
  }
  CHECK(quotients.size() >= 2);
  // A common factor of the quotients would survive restriction to a random
  // line, forcing a zero Sylvester resultant for every pair.
  std::mt19937_64 rng(33);
  bool coprime = false;
  for (int attempt = 0; attempt < 5 && !coprime; ++attempt) {
    auto base = oracle::random_values(names.size(), rng, 9), dir = oracle::random_values(names.size(), rng, 9);
    std::vector<std::vector<Rational>> lines;
    for (const auto& q : quotients) lines.push_back(restrict_to_line(q, base, dir));
    for (std::size_t a = 0; a < lines.size() && !coprime; ++a)
      for (std::size_t b = a + 1; b < lines.size() && !coprime; ++b)
        coprime = lines[a].size() <= 1 || (lines[b].size() > 1 && oracle::sylvester_resultant(lines[a], lines[b]) != 0);
  }
  CHECK(coprime);
}

TEST_CASE("univariate formulas") {
  std::mt19937_64 rng(34);
  for (int d1 = 1; d1 <= 4; ++d1)
    for (int d2 = 1; d2 <= 4; ++d2) {
      auto f1 = oracle::random_values(static_cast<std::size_t>(d1) + 1, rng, 9);
      auto f2 = oracle::random_values(static_cast<std::size_t>(d2) + 1, rng, 9);
      std::vector<Rational> q1(f1.begin(), f1.end()), q2(f2.begin(), f2.end());
      Integer want(oracle::sylvester_resultant(q1, q2));
      CHECK(bareiss_det(sylvester_matrix(f1, f2)) == want);
      auto h = homogenize_univariate(f1, f2);
      CHECK(h.degrees() == DegreeSystem({d1, d2}));
      for (int t = 0; t <= d1 + d2 - 1; ++t) CHECK(univariate_resultant(f1, f2, t).value == want);
      if (d1 == d2) {
        auto b = bezout_matrix(f1, f2);
        CHECK(b == b.transposed());
        CHECK(bezout_resultant(f1, f2) == want);
      }
    }
}

TEST_CASE("Dixon matrix") {
  std::mt19937_64 rng(35);
  for (int d = 1; d <= 3; ++d) {
    const DegreeSystem ds({d, d, d});
    auto sys = oracle::random_system(ds, rng, 9);
    auto dx = dixon_matrix(sys);
    CHECK(static_cast<std::int64_t>(dx.entries.rows()) == monomial_count(3, 2 * d - 2));
    CHECK(dx.entries.rows() == dx.entries.cols());
    CHECK(dixon_resultant(sys).value == resultant_specialized(sys).value);
    auto m = build_assembly(sys, 2 * d - 2).matrix;
    if (d == 2) CHECK(dx.entries.rows() == 6);
    CHECK(m.entries.rows() == dx.entries.rows());
    auto aligned = submatrix(m, dx.col_labels, dx.row_labels);
    CHECK(aligned.entries.transposed() == dx.entries);
  }
}

TEST_CASE("ternary quadrics") {
  const DegreeSystem ds({2, 2, 2});
  auto e = monomial_system<Integer>(ds);
  CHECK(abs(bareiss_det(ternary_quadric_matrix(e).entries)) == 512);
  CHECK(ternary_quadric_resultant(e).value == 1);
  std::mt19937_64 rng(36);
  for (int k = 0; k < 5; ++k) {
    auto sys = oracle::random_system(ds, rng, 9);
    CHECK(ternary_quadric_resultant(sys).value == resultant_specialized(sys, 1).value);
  }
}

TEST_CASE("Jacobian column") {
  std::mt19937_64 rng(37);
  for (const auto& degs : kSmall) {
    const DegreeSystem ds(degs);
    CHECK(jacobian_resultant(monomial_system<Integer>(ds)).value == 1);
    auto sys = oracle::random_system(ds, rng, 9);
    CHECK(jacobian_resultant(sys).value == resultant_specialized(sys).value);
  }
}

TEST_CASE("characteristic polynomials of the monomial system") {
  for (const auto& degs : kSmall) {
    const DegreeSystem ds(degs);
    auto e = monomial_system<Integer>(ds);
    std::int64_t total = 0;
    for (int i = 1; i <= ds.n(); ++i) total += ds.degree_product_except(i);
    std::vector<Integer> want;
    for (std::int64_t k = 0; k <= total; ++k) want.push_back(Integer(binomial(total, k) * (k % 2 ? -1 : 1)));
    for (int t = 0; t <= critical_degree(ds) + 1; ++t) {
      auto c = gcp(e, t);
      REQUIRE(!c.empty());
      CHECK(c[0] == 1);
      // (1 - s)^k for some k.
      const auto k = static_cast<std::int64_t>(c.size()) - 1;
      for (std::int64_t j = 0; j <= k; ++j)
        CHECK(c[static_cast<std::size_t>(j)] == Integer(binomial(k, j) * (j % 2 ? -1 : 1)));
      CHECK(perturbed_resultant(e, t) == want);
    }
  }
}

TEST_CASE("characteristic polynomial above the critical degree") {
  std::mt19937_64 rng(38);
  const DegreeSystem ds({1, 1, 2});
  const int tn = critical_degree(ds);
  for (int k = 0; k < 5; ++k) {
    auto sys = oracle::random_system(ds, rng, 9);
    auto c = gcp(sys, tn + 1);
    auto p = perturbed_resultant(sys, tn + 1);
    CHECK(c == p);
    for (int t = 0; t <= tn; ++t) CHECK(perturbed_resultant(sys, t) == p);
    CHECK(p[0] == resultant_specialized(sys).value);
  }
}

TEST_CASE("complex profile") {
  for (const auto& degs : std::vector<std::vector<int>>{{1, 1, 2}, {2, 2, 2}, {1, 2, 3}, {2, 2}, {1, 1, 1, 3}}) {
    const DegreeSystem ds(degs);
    auto range = determinantal_range(ds);
    for (int t = 0; t <= critical_degree(ds); ++t) {
      auto p = complex_profile(ds, t);
      CHECK(p.lowest == -ds.n());
      CHECK(p.highest() == ds.n() - 1);
      CHECK(p.determinantal() == (range && range->contains(t)));
      if (p.determinantal()) {
        CHECK(p.rank_at(-1) == rho_size(ds, t));
        CHECK(p.rank_at(0) == rho_size(ds, t));
      }
    }
  }
  auto p = complex_profile(DegreeSystem({1, 1, 2}), 0);
  CHECK(p.rank_at(-1) == 3);
  CHECK(p.rank_at(0) == 3);
  CHECK_THROWS_AS(complex_profile(DegreeSystem({1, 1, 2}), 2), InvalidArgument);
}

TEST_CASE("exactness of the complex") {
  std::mt19937_64 rng(39);
  for (const auto& degs : std::vector<std::vector<int>>{{1, 1, 2}, {2, 2}, {1, 2, 2}}) {
    const DegreeSystem ds(degs);
    auto sys = oracle::random_system(ds, rng, 9);
    for (int t = 0; t <= critical_degree(ds); ++t) {
      auto r = exactness_check(sys, t);
      CHECK(r.is_complex);
      CHECK(r.exact);
      CHECK(complex_differentials(sys, t).size() == static_cast<std::size_t>(2 * ds.n() - 1));
    }
  }
}

TEST_CASE("fallback when the extraneous factor vanishes") {
  std::mt19937_64 rng(40);
  const DegreeSystem ds({1, 1, 2});
  auto sys = oracle::random_system(ds, rng, 9);
  // det(E_2) is the X1 coefficient of f1.
  std::vector<MPoly<Integer>> polys = sys.polys();
  polys[0] = polys[0] - MPoly<Integer>::term(ExpVec{1, 0, 0}, polys[0].coeff_of(ExpVec{1, 0, 0}));
  PolySystem<Integer> bad(ds, polys);
  REQUIRE(bareiss_det(build_assembly(bad, 2).extraneous()) == 0);
  auto r = resultant_specialized(bad, 2);
  CHECK(r.attempts > 1);
  CHECK(r.value == resultant_specialized(bad, 0).value);
  CHECK_THROWS_AS(resultant_quotient(bad, build_assembly(bad, 2)).value(), std::bad_optional_access);

  std::vector<MPoly<Integer>> zeros(3, MPoly<Integer>(3));
  CHECK_THROWS_AS(resultant_specialized(PolySystem<Integer>(DegreeSystem({2, 2, 2}), zeros)), InvalidArgument);
  // Every M_t of (4,1,1) carries an extraneous factor.
  const DegreeSystem skew({4, 1, 1});
  REQUIRE(!determinantal_range(skew));
  PolySystem<Integer> powers(skew, {MPoly<Integer>::term(ExpVec{4, 0, 0}, Integer(1)),
                                    MPoly<Integer>::term(ExpVec{1, 0, 0}, Integer(1)),
                                    MPoly<Integer>::term(ExpVec{1, 0, 0}, Integer(1))});
  auto rp = resultant_specialized(powers);
  CHECK(rp.value == 0);
  CHECK(rp.attempts > 1);
  ResultantOptions once;
  once.max_attempts = 1;
  CHECK_THROWS_AS(resultant_specialized(powers, std::nullopt, once), DegenerateSpecialization);
}

TEST_CASE("symbolic size limit") {
  auto sys = generic_system(DegreeSystem({2, 2, 2}));
  ResultantOptions opt;
  opt.max_symbolic_size = 4;
  CHECK_THROWS_AS(resultant_generic(sys, 0, opt), SymbolicBudgetExceeded);
  opt.max_symbolic_size = 100;
  opt.max_symbolic_work = 1000;
  CHECK_THROWS_AS(resultant_generic(sys, 1, opt), SymbolicBudgetExceeded);
}
