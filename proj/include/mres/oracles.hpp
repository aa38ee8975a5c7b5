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

// Reference computations used to check the library. They share no code with
// the determinant, Bezoutian or index-set routines they are compared against.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mres/bezoutian.hpp"
#include "mres/corering.hpp"
#include "mres/linalg.hpp"

namespace mres::oracle {

// Gaussian elimination over Q with first-nonzero pivoting.
Rational gauss_det(Matrix<Rational> m);
Rational gauss_det(const Matrix<Integer>& m);
std::size_t gauss_rank(Matrix<Rational> m);

// Resultant of a(x) = sum a_j x^j and b(x) (coefficients lowest first) as
// the determinant of the Sylvester matrix; degrees are the vector lengths
// minus one, leading coefficients may vanish.
Rational sylvester_resultant(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Coefficients of the polynomial of degree < xs.size() through (xs, ys),
// lowest first.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// Number of gamma with |gamma| = t and 0 <= gamma_i < d_i, by enumeration.
std::int64_t count_reduced(const std::vector<int>& d, int t);
// Number of exponent vectors of length n and degree t, by enumeration.
std::int64_t count_monomials(int n, int t);

// f evaluated at X_k = point[k].
ParamPoly evaluate(const MPoly<ParamPoly>& f, const std::vector<ParamPoly>& point);
Integer evaluate(const MPoly<Integer>& f, const std::vector<Integer>& point);

// For f1, f2 linear and f3 quadratic in three variables: f3 at the cross
// product of the coefficient vectors of f1 and f2.
ParamPoly linear_linear_quadric(const PolySystem<ParamPoly>& sys);

// Random system with coefficients uniform in [-bound, bound], every
// monomial present.
PolySystem<Integer> random_system(const DegreeSystem& ds, std::mt19937_64& rng, int bound);
std::vector<Integer> random_values(std::size_t count, std::mt19937_64& rng, int bound);

}  // namespace mres::oracle
