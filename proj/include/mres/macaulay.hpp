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

// Resultants as quotients of determinants.
//
// For a degree t >= 0, M_t has the block layout
//
//   [ Delta_t        D_t ]   rows: monomials of degree t
//   [ D'_{t_n-t}     0   ]   rows: dual multiples (j, gamma)
//
// with columns the dual monomials T_gamma, |gamma| = t_n - t, followed by the
// multiples X^gamma f_j, gamma in S^{t,j}. For t > t_n only D_t remains. The
// extraneous factor E_t is the square submatrix on the rows and columns
// attached to E_t and E_{t_n-t}, and Res = +-det(M_t) / det(E_t).
//
// Signs are normalized so that Res(X_1^d_1, ..., X_n^d_n) = 1.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mres/bezoutian.hpp"
#include "mres/combinat.hpp"
#include "mres/linalg.hpp"

namespace mres {

template <class C>
struct MacaulayAssembly {
  int t = 0;
  LabeledMatrix<C> matrix;
  // E_t: monomial rows with two exceeding exponents, multiple columns in
  // E^{t,j}.
  std::vector<Label> e_rows;
  std::vector<Label> e_cols;
  // The transposed E_{t_n-t}: dual multiple rows in E^{t_n-t,j}, dual
  // monomial columns.
  std::vector<Label> e_dual_rows;
  std::vector<Label> e_dual_cols;

  // The full extraneous factor, rows and columns in the order of matrix.
  LabeledMatrix<C> extraneous() const;
  LabeledMatrix<C> e_block() const { return submatrix(matrix, e_rows, e_cols); }
  LabeledMatrix<C> e_dual_block() const { return submatrix(matrix, e_dual_rows, e_dual_cols); }
};

// D_t: rows degree-t monomials, columns X^gamma f_j for gamma in S^{t,j}.
template <class C>
LabeledMatrix<C> sylvester_block(const PolySystem<C>& sys, int t);

// bez may be null, in which case the Bezoutian is computed when needed.
template <class C>
MacaulayAssembly<C> build_assembly(const PolySystem<C>& sys, int t, const MPoly<C>* bez = nullptr);

// The unrestricted map: every multiple X^gamma f_j with |gamma| = t - d_j as
// a column and every dual multiple with |gamma| = t_n - t - d_j as a row.
template <class C>
LabeledMatrix<C> psi_tilde(const PolySystem<C>& sys, int t, const MPoly<C>* bez = nullptr);

// M'_t built from explicitly chosen multiple columns (degree t) and dual
// multiple rows (degree t_n - t), together with the label sets of its
// extraneous factor. No validity search is done.
template <class C>
MacaulayAssembly<C> custom_assembly(const PolySystem<C>& sys, int t,
                                    const std::vector<Label>& multiple_cols,
                                    const std::vector<Label>& dual_multiple_rows,
                                    const std::vector<Label>& e_rows, const std::vector<Label>& e_cols,
                                    const std::vector<Label>& e_dual_rows,
                                    const std::vector<Label>& e_dual_cols,
                                    const MPoly<C>* bez = nullptr);

struct ResultantOptions {
  bool normalize_sign = true;
  // Largest rho(t) accepted for parameter-polynomial input.
  std::int64_t max_symbolic_size = 16;
  // Number of (t, permutation) attempts for specialized input.
  int max_attempts = 64;
  // Budget of coefficient operations for the determinant of a parametric
  // matrix (see bareiss_det); 0 means unbounded.
  std::size_t max_symbolic_work = 0;
};

template <class C>
struct ResultantValue {
  C value;
  // Sign applied to det(M)/det(E); 1 when normalization is off.
  int sign = 1;
  int t = 0;
  C det_m;
  C det_e;
  C det_e_t;
  C det_e_dual;
  // Polynomial and variable orders of the system actually used (0-based);
  // identity unless a specialized fallback permuted the input.
  std::vector<int> poly_order;
  std::vector<int> var_order;
  int attempts = 1;
  std::string route;
};

// The sign det(M_t(e)) det(E_t(e)) for the monomial system e, using the same
// labels as the given assembly.
int normalization_sign(const DegreeSystem& ds, int t);
template <class C>
int normalization_sign(const DegreeSystem& ds, const MacaulayAssembly<C>& shape);

// det(M)/det(E) for one assembly; nullopt when det(E) = 0. Throws
// InexactDivision if the quotient is not exact.
template <class C>
std::optional<ResultantValue<C>> resultant_quotient(const PolySystem<C>& sys,
                                                    const MacaulayAssembly<C>& a,
                                                    const ResultantOptions& opt = {});

// Symbolic resultant of a parameter-polynomial system. Throws
// SymbolicBudgetExceeded when rho(t) exceeds opt.max_symbolic_size.
ResultantValue<ParamPoly> resultant_generic(const PolySystem<ParamPoly>& sys, int t,
                                            const ResultantOptions& opt = {},
                                            const MPoly<ParamPoly>* bez = nullptr);

// Exact resultant of a specialized system. Tries t (minimal_t when absent),
// then t_n + 1, then the remaining t in [0, t_n + 1] by increasing size, and
// then permutations of polynomials and variables, correcting the sign.
// Throws DegenerateSpecialization when every attempt has det(E) = 0.
template <class C>
ResultantValue<C> resultant_specialized(const PolySystem<C>& sys, std::optional<int> t = {},
                                        const ResultantOptions& opt = {});

// Macaulay's classical formula, t = t_n + 1.
template <class C>
ResultantValue<C> classical_macaulay(const PolySystem<C>& sys, const ResultantOptions& opt = {});

// For each polynomial, the {min, max} total degree of the terms of r in that
// polynomial's generic coefficients (parameters laid out as in
// generic_system).
std::vector<std::pair<int, int>> coefficient_degrees(const ParamPoly& r, const DegreeSystem& ds);

// ---------------------------------------------------------------------------
// Generalized characteristic polynomial.

// Coefficients of C_t(s), lowest degree first. Columns of M_t are reordered so
// that M_t(e) is the identity, and C_t(s) = det(M' - sI) / det(E' - sI), so
// C_t(0) is the normalized resultant.
template <class C>
std::vector<C> gcp(const PolySystem<C>& sys, int t);

// det(M_t(f - s e)) / det(E_t(f - s e)) with f_i - s X_i^{d_i}, computed over
// Z[s] and normalized; this is Res(f - s e) for every t. It agrees with gcp
// when t > t_n, where M_t is linear in the coefficients.
std::vector<Integer> perturbed_resultant(const PolySystem<Integer>& sys, int t);

// ---------------------------------------------------------------------------
// Special formulas.

// Dixon matrix of three forms of equal degree d in X_1, X_2, X_3, after
// setting X_3 = 1. Rows m f_i (deg m <= d-2) then B_beta (|beta| <= d-1);
// columns the monomials of degree <= 2d-2. Labels use the homogenized
// exponents, so rows match the columns of M_{2d-2}.
template <class C>
LabeledMatrix<C> dixon_matrix(const PolySystem<C>& sys);
template <class C>
ResultantValue<C> dixon_resultant(const PolySystem<C>& sys);

// Univariate polynomials are coefficient vectors, lowest degree first. The
// homogenization of sum a_j x^j of degree d is sum a_j X_1^j X_2^{d-j}.
template <class C>
PolySystem<C> homogenize_univariate(const std::vector<C>& f1, const std::vector<C>& f2);
// Classical Sylvester matrix, leading coefficients first.
template <class C>
Matrix<C> sylvester_matrix(const std::vector<C>& f1, const std::vector<C>& f2);
// Classical Bezout matrix c_ij of two polynomials of equal degree d:
// (f1(x) f2(y) - f1(y) f2(x)) / (x - y) = sum c_ij x^i y^j.
template <class C>
Matrix<C> bezout_matrix(const std::vector<C>& f1, const std::vector<C>& f2);
template <class C>
C bezout_resultant(const std::vector<C>& f1, const std::vector<C>& f2);
// Determinantal formula at any 0 <= t <= d1 + d2 - 1.
template <class C>
ResultantValue<C> univariate_resultant(const std::vector<C>& f1, const std::vector<C>& f2, int t);

// Three ternary quadrics: rows f_1, f_2, f_3, dJ/dX_1, dJ/dX_2, dJ/dX_3 over
// the six quadratic monomials; Res = det / 512 after normalization.
template <class C>
LabeledMatrix<C> ternary_quadric_matrix(const PolySystem<C>& sys);
template <class C>
ResultantValue<C> ternary_quadric_resultant(const PolySystem<C>& sys);

// M_{t_n} with its single Delta_0 column replaced by the Jacobian. The
// value of the returned ResultantValue is the quotient divided by d_1...d_n;
// det_m and det_e hold the raw determinants.
template <class C>
MacaulayAssembly<C> jacobian_assembly(const PolySystem<C>& sys);
template <class C>
ResultantValue<C> jacobian_resultant(const PolySystem<C>& sys);

// ---------------------------------------------------------------------------
// The coupled complex C^{-n} -> ... -> C^{n-1} whose middle map is psi_tilde.

struct ComplexProfile {
  int t = 0;
  int lowest = 0;  // -n
  std::vector<std::int64_t> ranks;  // ranks[k - lowest] = rank of C^k

  std::int64_t rank_at(int k) const;
  int highest() const { return lowest + static_cast<int>(ranks.size()) - 1; }
  // Only C^{-1} and C^0 are nonzero.
  bool determinantal() const;
};

// Requires 0 <= t <= t_n.
ComplexProfile complex_profile(const DegreeSystem& ds, int t);

// Matrices of d_k : C^k -> C^{k+1} for k = -n .. n-2, rows indexing C^{k+1}.
template <class C>
std::vector<LabeledMatrix<C>> complex_differentials(const PolySystem<C>& sys, int t);

struct ExactnessReport {
  int t = 0;
  ComplexProfile profile;
  std::vector<std::size_t> differential_ranks;  // rank of d_k, k = -n .. n-2
  bool is_complex = true;                       // d_{k+1} d_k = 0 everywhere
  std::vector<bool> exact_at;                   // per C^k
  bool exact = true;
};

template <class C>
ExactnessReport exactness_check(const PolySystem<C>& sys, int t);

}  // namespace mres
