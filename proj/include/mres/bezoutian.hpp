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

// Polynomial systems and their Bezoutian.
//
// For f_1..f_n homogeneous in X_1..X_n, Delta_ij(X,Y) is the quotient of
//   f_i(Y_1..Y_{j-1}, X_j, ..., X_n) - f_i(Y_1..Y_j, X_{j+1}, ..., X_n)
// by X_j - Y_j, and the Bezoutian is Delta(X,Y) = det(Delta_ij), rows i and
// columns j. Polynomials in (X,Y) have 2n variables, X first.

#pragma once

#include <utility>
#include <vector>

#include "mres/combinat.hpp"
#include "mres/corering.hpp"
#include "mres/linalg.hpp"

namespace mres {

template <class C>
class PolySystem {
 public:
  // Throws InvalidArgument unless f_i is homogeneous of degree d_i in n
  // variables and nonzero.
  PolySystem(DegreeSystem ds, std::vector<MPoly<C>> polys);

  const DegreeSystem& degrees() const noexcept { return ds_; }
  int n() const noexcept { return ds_.n(); }
  // 1-based.
  const MPoly<C>& f(int i) const { return polys_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<MPoly<C>>& polys() const noexcept { return polys_; }

  // The system f_{perm[0]}, ..., f_{perm[n-1]} (0-based indices).
  PolySystem permuted_polys(const std::vector<int>& perm) const;
  // Substitutes X_k -> X_{perm[k]} in every polynomial.
  PolySystem permuted_vars(const std::vector<int>& perm) const;

  bool operator==(const PolySystem& o) const = default;

 private:
  DegreeSystem ds_;
  std::vector<MPoly<C>> polys_;
};

// The generic system: f_i = sum_k a_i_k X^alpha_k over the degree-d_i
// monomials in canonical order. Parameter a_i_k has index
// (number of parameters of f_1..f_{i-1}) + k - 1.
PolySystem<ParamPoly> generic_system(const DegreeSystem& ds, ParamSpace* names = nullptr);

// f_i = X_i^{d_i}.
template <class C>
PolySystem<C> monomial_system(const DegreeSystem& ds);

PolySystem<Integer> specialize_system(const PolySystem<ParamPoly>& sys,
                                      std::span<const Integer> values);

template <class C>
MPoly<C> derivative(const MPoly<C>& p, int var);

template <class C>
MPoly<C> incremental_quotient(const PolySystem<C>& sys, int i, int j);

template <class C>
MPoly<C> bezoutian(const PolySystem<C>& sys);

// Swaps the X block and the Y block of a polynomial in 2n variables.
template <class C>
MPoly<C> swap_xy(const MPoly<C>& p);

// Delta_gamma(X) for every |gamma| = t_n - t, gamma in canonical order;
// zero slices included. Throws InvalidArgument unless 0 <= t <= t_n.
template <class C>
std::vector<std::pair<ExpVec, MPoly<C>>> delta_slices(const MPoly<C>& bez,
                                                      const DegreeSystem& ds, int t);

// The Delta_t block: rows degree-t monomials, columns dual monomials
// T_gamma with |gamma| = t_n - t; entry (lambda, gamma) is the coefficient
// of X^lambda in Delta_gamma.
template <class C>
LabeledMatrix<C> delta_matrix(const MPoly<C>& bez, const DegreeSystem& ds, int t);
template <class C>
LabeledMatrix<C> delta_matrix(const PolySystem<C>& sys, int t) {
  return delta_matrix(bezoutian(sys), sys.degrees(), t);
}

// Delta(X, 0), a form of degree t_n in X.
template <class C>
MPoly<C> delta_zero(const PolySystem<C>& sys);
// det(d f_i / d X_j).
template <class C>
MPoly<C> jacobian(const PolySystem<C>& sys);

}  // namespace mres
