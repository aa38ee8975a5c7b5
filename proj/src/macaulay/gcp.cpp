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

#include "internal.hpp"

namespace mres {

namespace {

// Exact quotient of univariate polynomials, coefficients lowest first.
template <class C>
std::vector<C> poly_divide(std::vector<C> num, const std::vector<C>& den) {
  while (!num.empty() && is_zero(num.back())) num.pop_back();
  if (den.empty() || is_zero(den.back())) throw InvalidArgument("division by zero polynomial");
  if (num.empty()) return {};
  if (num.size() < den.size()) throw InexactDivision("characteristic polynomial quotient is not exact");
  const std::size_t dq = num.size() - den.size();
  std::vector<C> q(dq + 1, RingTraits<C>::zero());
  for (std::size_t k = dq + 1; k-- > 0;) {
    C c = exact_div(num[k + den.size() - 1], den.back());
    for (std::size_t i = 0; i < den.size(); ++i) sub_product(num[k + i], c, den[i]);
    q[k] = std::move(c);
  }
  for (const auto& r : num)
    if (!is_zero(r)) throw InexactDivision("characteristic polynomial quotient is not exact");
  return q;
}

}  // namespace

template <class C>
std::vector<C> gcp(const PolySystem<C>& sys, int t) {
  auto a = build_assembly(sys, t);
  auto e = build_assembly(monomial_system<Integer>(sys.degrees()), t);
  const std::size_t n = a.matrix.rows();
  const auto& me = e.matrix.entries;

  // col_for_row[r]: the column whose only nonzero entry at e sits in row r.
  std::vector<std::size_t> col_for_row(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      if (sgn(me(r, c)) == 0) continue;
      if (me(r, c) != 1 || col_for_row[r] != n)
        throw Error("internal: M_t at the monomial system is not a permutation matrix");
      col_for_row[r] = c;
    }
  }
  if (std::count(col_for_row.begin(), col_for_row.end(), n) != 0)
    throw Error("internal: M_t at the monomial system is not a permutation matrix");

  Matrix<C> mp(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) mp(r, c) = a.matrix.entries(r, col_for_row[c]);

  // Rows of E and the columns they are matched with must coincide.
  auto row_pos = [&](const Label& l) {
    auto it = std::find(a.matrix.row_labels.begin(), a.matrix.row_labels.end(), l);
    return static_cast<std::size_t>(it - a.matrix.row_labels.begin());
  };
  auto col_pos = [&](const Label& l) {
    auto it = std::find(a.matrix.col_labels.begin(), a.matrix.col_labels.end(), l);
    return static_cast<std::size_t>(it - a.matrix.col_labels.begin());
  };
  std::vector<std::size_t> idx, ecols;
  for (const auto& l : a.e_rows) idx.push_back(row_pos(l));
  for (const auto& l : a.e_dual_rows) idx.push_back(row_pos(l));
  for (const auto& l : a.e_cols) ecols.push_back(col_pos(l));
  for (const auto& l : a.e_dual_cols) ecols.push_back(col_pos(l));
  std::vector<std::size_t> matched;
  for (std::size_t r : idx) matched.push_back(col_for_row[r]);
  std::sort(matched.begin(), matched.end());
  std::sort(ecols.begin(), ecols.end());
  if (matched != ecols) throw Error("internal: extraneous factor is not principal after reordering");
  std::sort(idx.begin(), idx.end());

  Matrix<C> ep(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) ep(i, j) = mp(idx[i], idx[j]);

  // det(M' - sI) / det(E' - sI) = (-1)^(|M|-|E|) charpoly(M') / charpoly(E').
  auto q = poly_divide(berkowitz_charpoly(mp), berkowitz_charpoly(ep));
  if ((n - idx.size()) % 2)
    for (auto& c : q) c = -c;
  return q;
}

std::vector<Integer> perturbed_resultant(const PolySystem<Integer>& sys, int t) {
  const int n = sys.n();
  const ParamPoly s = ParamPoly::variable(1, 0);
  std::vector<MPoly<ParamPoly>> polys;
  for (int i = 1; i <= n; ++i) {
    std::vector<std::pair<ExpVec, ParamPoly>> terms;
    const auto& f = sys.f(i);
    for (std::size_t k = 0; k < f.size(); ++k)
      terms.emplace_back(f.exponents(k), ParamPoly::constant(1, f.coeff(k)));
    ExpVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = sys.degrees().d(i);
    terms.emplace_back(e, -s);
    polys.push_back(MPoly<ParamPoly>::from_terms(n, std::move(terms)));
  }
  PolySystem<ParamPoly> g(sys.degrees(), std::move(polys));
  auto r = resultant_quotient(g, build_assembly(g, t), ResultantOptions{});
  if (!r) throw Error("internal: extraneous factor of the perturbed system vanishes");
  std::vector<Integer> out;
  for (std::size_t k = 0; k < r->value.size(); ++k) {
    const auto deg = static_cast<std::size_t>(r->value.term_degree(k));
    if (out.size() <= deg) out.resize(deg + 1, Integer(0));
    out[deg] = r->value.coeff(k);
  }
  return out;
}

template std::vector<Integer> gcp(const PolySystem<Integer>&, int);
template std::vector<Rational> gcp(const PolySystem<Rational>&, int);
template std::vector<ParamPoly> gcp(const PolySystem<ParamPoly>&, int);

}  // namespace mres
