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
#include "mres/corering.hpp"

using namespace mres;

namespace {

using P = MPoly<Integer>;

P x(int nvars, int i) { return P::variable(nvars, i); }
P c(long v) { return P::constant(0, Integer(v)); }

P random_poly(std::mt19937& rng, int nvars, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, maxdeg);
  std::vector<std::pair<ExpVec, Integer>> t;
  for (int k = 0; k < terms; ++k) {
    ExpVec e(nvars);
    for (auto& v : e) v = deg(rng);
    t.emplace_back(e, Integer(coef(rng)));
  }
  return P::from_terms(nvars, t);
}

}  // namespace

TEST_CASE("addition cancels and multiplication expands") {
  // Variables X1, Y1 as a 2-variable ring; X2 for the 3rd case.
  P x1 = x(2, 0), x2 = x(2, 1);
  CHECK((x1 + x2) + (x1 - x2) == x1 * c(2));
  P y1 = x(2, 1);
  CHECK((x1 + y1) * (x1 - y1) == x1 * x1 - y1 * y1);
}

TEST_CASE("generic monomial product over the parameter ring") {
  ParamSpace ps({"a1", "b2"});
  auto a1 = ps.variable("a1"), b2 = ps.variable("b2");
  using Q = MPoly<ParamPoly>;
  Q p = Q::term(ExpVec{1, 0}, a1), q = Q::term(ExpVec{0, 1}, b2);
  Q r = p * q;
  REQUIRE(r.size() == 1);
  CHECK(r.exponents(0) == ExpVec{1, 1});
  CHECK(r.coeff(0) == a1 * b2);
}

TEST_CASE("exact division") {
  P x1 = x(2, 0), y1 = x(2, 1);
  CHECK(P::divide(x1 * x1 - y1 * y1, x1 - y1) == x1 + y1);
  P f = x1 * x1 * x1 - y1 * y1 * y1;
  CHECK(P::divide(f, c(1)) == f);
  P q = P::divide(f, x1 - y1);
  CHECK(q == x1 * x1 + x1 * y1 + y1 * y1);
  CHECK(q * (x1 - y1) == f);
  CHECK_THROWS_AS(P::divide(f, x1 + y1 + y1), InexactDivision);
  CHECK_THROWS_AS(P::divide(x1 * c(3), c(2)), InexactDivision);
  CHECK_THROWS_AS(P::divide(x1, P(2)), InvalidArgument);
}

TEST_CASE("variable count and scalar kind mismatches are errors") {
  CHECK_THROWS_AS(x(2, 0) + x(3, 0), VariableCountMismatch);
  CHECK_THROWS_AS(x(2, 0) * x(3, 0), VariableCountMismatch);
  CHECK_THROWS_AS(Scalar(Integer(1)) + Scalar(Rational(1, 2)), ScalarKindMismatch);
  CHECK(Scalar(Rational(2, 4)).as_rational() == Rational(1, 2));
  CHECK((Scalar(Integer(6)) * Scalar(Integer(7))).as_integer() == 42);
  CHECK_THROWS_AS(exact_div(Scalar(Integer(7)), Scalar(Integer(2))), InexactDivision);
}

TEST_CASE("monomial order") {
  CHECK(monomial_cmp(ExpVec{1, 0, 0}, ExpVec{0, 1, 0}) < 0);
  CHECK(monomial_cmp(ExpVec{1, 0, 0}, ExpVec{0, 0, 2}) < 0);
  CHECK(monomial_cmp(ExpVec{0, 2}, ExpVec{0, 2}) == 0);
  CHECK_THROWS_AS((void)monomial_cmp(ExpVec{1}, ExpVec{1, 0}), VariableCountMismatch);
  auto m = monomials_of_degree(3, 2);
  CHECK(m.size() == 6);
  CHECK(m.front() == ExpVec{2, 0, 0});
  CHECK(m.back() == ExpVec{0, 0, 2});

  // Strict total order on all monomials of degree <= 3 in 3 variables.
  std::vector<ExpVec> all;
  for (int d = 0; d <= 3; ++d)
    for (auto& e : monomials_of_degree(3, d)) all.push_back(e);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      auto a = monomial_cmp(all[i], all[j]);
      CHECK((a == 0) == (i == j));
      CHECK((a < 0) == (i < j));
    }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int it = 0; it < 40; ++it) {
    P a = random_poly(rng, 3, 6, 3), b = random_poly(rng, 3, 5, 3), d = random_poly(rng, 3, 4, 2);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == P(3));
    if (!b.is_zero()) CHECK(P::divide(a * b, b) == a);
  }
}

TEST_CASE("nested coefficient ring division") {
  std::mt19937 rng(11);
  using Q = MPoly<ParamPoly>;
  for (int it = 0; it < 20; ++it) {
    std::vector<std::pair<ExpVec, ParamPoly>> ta, tb;
    for (int k = 0; k < 4; ++k) {
      ta.emplace_back(ExpVec{int(rng() % 3), int(rng() % 3)}, random_poly(rng, 2, 3, 2));
      tb.emplace_back(ExpVec{int(rng() % 2), int(rng() % 2)}, random_poly(rng, 2, 2, 1));
    }
    Q a = Q::from_terms(2, ta), b = Q::from_terms(2, tb);
    if (b.is_zero()) continue;
    CHECK(Q::divide(a * b, b) == a);
  }
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937 rng(3);
  ParamSpace ps({"p", "q", "r"});
  std::map<std::string, Integer> asg{{"p", 2}, {"q", -3}, {"r", 5}};
  for (int it = 0; it < 30; ++it) {
    P a = random_poly(rng, 3, 5, 3), b = random_poly(rng, 3, 5, 2);
    CHECK(specialize(a * b, ps, asg) == specialize(a, ps, asg) * specialize(b, ps, asg));
    CHECK(specialize(a + b, ps, asg) == specialize(a, ps, asg) + specialize(b, ps, asg));
  }
  CHECK_THROWS_AS(specialize(ps.variable("q"), ps, {{"p", 1}}), MissingParameter);

  // (a1 b2 - a2 b1) X3 at a = (1,0), b = (0,1) gives X3.
  ParamSpace ab({"a1", "a2", "b1", "b2"});
  ParamPoly det = ab.variable("a1") * ab.variable("b2") - ab.variable("a2") * ab.variable("b1");
  MPoly<ParamPoly> f = MPoly<ParamPoly>::term(ExpVec{0, 0, 1}, det);
  auto g = specialize(f, ab, {{"a1", 1}, {"a2", 0}, {"b1", 0}, {"b2", 1}});
  CHECK(g == P::variable(3, 2));
  // a1 X1 with a1 -> 3.
  ParamSpace one({"a1"});
  auto h = specialize(MPoly<ParamPoly>::term(ExpVec{1, 0}, one.variable("a1")), one, {{"a1", 3}});
  CHECK(h == P::term(ExpVec{1, 0}, Integer(3)));
}
