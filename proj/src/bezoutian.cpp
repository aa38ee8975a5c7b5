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

#include "mres/bezoutian.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace mres {

template <class C>
PolySystem<C>::PolySystem(DegreeSystem ds, std::vector<MPoly<C>> polys)
    : ds_(std::move(ds)), polys_(std::move(polys)) {
  if (static_cast<int>(polys_.size()) != ds_.n())
    throw InvalidArgument("expected " + std::to_string(ds_.n()) + " polynomials, got " +
                          std::to_string(polys_.size()));
  for (int i = 1; i <= ds_.n(); ++i) {
    auto& p = polys_[static_cast<std::size_t>(i - 1)];
    if (p.is_zero()) throw InvalidArgument("polynomial f" + std::to_string(i) + " is zero");
    if (p.nvars() != ds_.n())
      throw VariableCountMismatch("polynomial f" + std::to_string(i) + " has " +
                                  std::to_string(p.nvars()) + " variables, expected " +
                                  std::to_string(ds_.n()));
    if (!p.is_homogeneous() || p.degree() != ds_.d(i))
      throw InvalidArgument("polynomial f" + std::to_string(i) +
                            " is not homogeneous of degree " + std::to_string(ds_.d(i)));
  }
}

template <class C>
PolySystem<C> PolySystem<C>::permuted_polys(const std::vector<int>& perm) const {
  std::vector<int> d;
  std::vector<MPoly<C>> f;
  for (int k : perm) {
    d.push_back(ds_.d(k + 1));
    f.push_back(polys_.at(static_cast<std::size_t>(k)));
  }
  return PolySystem(DegreeSystem(std::move(d)), std::move(f));
}

template <class C>
PolySystem<C> PolySystem<C>::permuted_vars(const std::vector<int>& perm) const {
  std::vector<MPoly<C>> f;
  for (const auto& p : polys_) {
    std::vector<std::pair<ExpVec, C>> terms;
    for (std::size_t k = 0; k < p.size(); ++k) {
      ExpVec e = p.exponents(k), g(e.size(), 0);
      for (std::size_t v = 0; v < e.size(); ++v) g.at(static_cast<std::size_t>(perm.at(v))) = e[v];
      terms.emplace_back(std::move(g), p.coeff(k));
    }
    f.push_back(MPoly<C>::from_terms(n(), std::move(terms)));
  }
  return PolySystem(ds_, std::move(f));
}

PolySystem<ParamPoly> generic_system(const DegreeSystem& ds, ParamSpace* names) {
  std::vector<std::vector<ExpVec>> mons;
  std::vector<std::string> pnames;
  for (int i = 1; i <= ds.n(); ++i) {
    mons.push_back(monomials_of_degree(ds.n(), ds.d(i)));
    for (std::size_t k = 1; k <= mons.back().size(); ++k)
      pnames.push_back(generic_param_name(i, static_cast<int>(k)));
  }
  const int np = static_cast<int>(pnames.size());
  std::vector<MPoly<ParamPoly>> f;
  int idx = 0;
  for (const auto& ms : mons) {
    std::vector<std::pair<ExpVec, ParamPoly>> terms;
    for (const auto& e : ms) terms.emplace_back(e, ParamPoly::variable(np, idx++));
    f.push_back(MPoly<ParamPoly>::from_terms(ds.n(), std::move(terms)));
  }
  if (names) *names = ParamSpace(std::move(pnames));
  return PolySystem<ParamPoly>(ds, std::move(f));
}

template <class C>
PolySystem<C> monomial_system(const DegreeSystem& ds) {
  std::vector<MPoly<C>> f;
  for (int i = 1; i <= ds.n(); ++i) {
    ExpVec e(ds.n(), 0);
    e[i - 1] = ds.d(i);
    f.push_back(MPoly<C>::term(e, RingTraits<C>::one()));
  }
  return PolySystem<C>(ds, std::move(f));
}

PolySystem<Integer> specialize_system(const PolySystem<ParamPoly>& sys,
                                      std::span<const Integer> values) {
  std::vector<MPoly<Integer>> f;
  for (const auto& p : sys.polys()) {
    f.push_back(specialize(p, values));
    if (f.back().is_zero()) f.back() = MPoly<Integer>(sys.n());
  }
  return PolySystem<Integer>(sys.degrees(), std::move(f));
}

template <class C>
MPoly<C> derivative(const MPoly<C>& p, int var) {
  if (var < 0 || var >= p.nvars()) throw InvalidArgument("derivative variable out of range");
  std::vector<std::pair<ExpVec, C>> terms;
  for (std::size_t k = 0; k < p.size(); ++k) {
    ExpVec e = p.exponents(k);
    int m = e[static_cast<std::size_t>(var)];
    if (m == 0) continue;
    --e[static_cast<std::size_t>(var)];
    terms.emplace_back(std::move(e), C(p.coeff(k) * RingTraits<C>::from_int(m)));
  }
  return MPoly<C>::from_terms(p.nvars(), std::move(terms));
}

// Each monomial X^alpha of f_i contributes
//   Y_1^a_1 .. Y_{j-1}^a_{j-1} X_{j+1}^a_{j+1} .. X_n^a_n sum_{k<a_j} X_j^{a_j-1-k} Y_j^k.
template <class C>
MPoly<C> incremental_quotient(const PolySystem<C>& sys, int i, int j) {
  const int n = sys.n();
  if (i < 1 || i > n || j < 1 || j > n) throw InvalidArgument("incremental quotient index out of range");
  std::vector<std::pair<ExpVec, C>> terms;
  const auto& f = sys.f(i);
  for (std::size_t m = 0; m < f.size(); ++m) {
    ExpVec a = f.exponents(m);
    const int aj = a[static_cast<std::size_t>(j - 1)];
    if (aj == 0) continue;
    ExpVec base(2 * n, 0);
    for (int v = 0; v < j - 1; ++v) base[static_cast<std::size_t>(n + v)] = a[static_cast<std::size_t>(v)];
    for (int v = j; v < n; ++v) base[static_cast<std::size_t>(v)] = a[static_cast<std::size_t>(v)];
    for (int k = 0; k < aj; ++k) {
      ExpVec e = base;
      e[static_cast<std::size_t>(j - 1)] = aj - 1 - k;
      e[static_cast<std::size_t>(n + j - 1)] = k;
      terms.emplace_back(std::move(e), f.coeff(m));
    }
  }
  return MPoly<C>::from_terms(2 * n, std::move(terms));
}

template <class C>
MPoly<C> bezoutian(const PolySystem<C>& sys) {
  const int n = sys.n();
  Matrix<MPoly<C>> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = incremental_quotient(sys, i, j);
  MPoly<C> d = bareiss_det(std::move(m));
  return d.is_zero() ? MPoly<C>(2 * n) : d.lifted(2 * n);
}

template <class C>
MPoly<C> swap_xy(const MPoly<C>& p) {
  if (p.nvars() % 2) throw InvalidArgument("swap_xy needs an even variable count");
  const std::size_t n = static_cast<std::size_t>(p.nvars() / 2);
  std::vector<std::pair<ExpVec, C>> terms;
  for (std::size_t k = 0; k < p.size(); ++k) {
    ExpVec e = p.exponents(k);
    std::rotate(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n), e.end());
    terms.emplace_back(std::move(e), p.coeff(k));
  }
  return MPoly<C>::from_terms(p.nvars(), std::move(terms));
}

template <class C>
std::vector<std::pair<ExpVec, MPoly<C>>> delta_slices(const MPoly<C>& bez,
                                                      const DegreeSystem& ds, int t) {
  const int n = ds.n(), tn = critical_degree(ds);
  if (t < 0 || t > tn)
    throw InvalidArgument("slice degree " + std::to_string(t) + " outside 0.." + std::to_string(tn));
  if (!bez.is_zero() && bez.nvars() != 2 * n)
    throw VariableCountMismatch("Bezoutian must have 2n variables");
  std::map<ExpVec, std::vector<std::pair<ExpVec, C>>> parts;
  for (std::size_t k = 0; k < bez.size(); ++k) {
    ExpVec e = bez.exponents(k);
    ExpVec x(e.begin(), e.begin() + n), y(e.begin() + n, e.end());
    if (total_degree(y) != tn - t) continue;
    parts[std::move(y)].emplace_back(std::move(x), bez.coeff(k));
  }
  std::vector<std::pair<ExpVec, MPoly<C>>> out;
  for (auto& g : monomials_of_degree(n, tn - t)) {
    auto it = parts.find(g);
    MPoly<C> s = it == parts.end() ? MPoly<C>(n) : MPoly<C>::from_terms(n, std::move(it->second));
    out.emplace_back(std::move(g), std::move(s));
  }
  return out;
}

template <class C>
LabeledMatrix<C> delta_matrix(const MPoly<C>& bez, const DegreeSystem& ds, int t) {
  auto slices = delta_slices(bez, ds, t);
  auto rows = monomials_of_degree(ds.n(), t);
  std::map<ExpVec, std::size_t> row_index;
  LabeledMatrix<C> m;
  m.entries = Matrix<C>(rows.size(), slices.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    row_index.emplace(rows[i], i);
    m.row_labels.push_back(Label::monomial(rows[i]));
  }
  for (std::size_t j = 0; j < slices.size(); ++j) {
    m.col_labels.push_back(Label::dual(slices[j].first));
    const auto& s = slices[j].second;
    for (std::size_t k = 0; k < s.size(); ++k) m.entries(row_index.at(s.exponents(k)), j) = s.coeff(k);
  }
  m.blocks = {slices.size(), 0, rows.size(), 0};
  return m;
}

template <class C>
MPoly<C> delta_zero(const PolySystem<C>& sys) {
  const int n = sys.n();
  MPoly<C> bez = bezoutian(sys);
  std::vector<std::pair<ExpVec, C>> terms;
  for (std::size_t k = 0; k < bez.size(); ++k) {
    ExpVec e = bez.exponents(k);
    if (std::any_of(e.begin() + n, e.end(), [](int x) { return x != 0; })) continue;
    e.resize(static_cast<std::size_t>(n));
    terms.emplace_back(std::move(e), bez.coeff(k));
  }
  return MPoly<C>::from_terms(n, std::move(terms));
}

template <class C>
MPoly<C> jacobian(const PolySystem<C>& sys) {
  const int n = sys.n();
  Matrix<MPoly<C>> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = derivative(sys.f(i + 1), j);
  MPoly<C> d = bareiss_det(std::move(m));
  return d.is_zero() ? MPoly<C>(n) : d.lifted(n);
}

#define MRES_INSTANTIATE_BEZOUTIAN(C)                                                         \
  template class PolySystem<C>;                                                               \
  template PolySystem<C> monomial_system<C>(const DegreeSystem&);                             \
  template MPoly<C> derivative(const MPoly<C>&, int);                                         \
  template MPoly<C> incremental_quotient(const PolySystem<C>&, int, int);                     \
  template MPoly<C> bezoutian(const PolySystem<C>&);                                          \
  template MPoly<C> swap_xy(const MPoly<C>&);                                                 \
  template std::vector<std::pair<ExpVec, MPoly<C>>> delta_slices(const MPoly<C>&,             \
                                                                 const DegreeSystem&, int);   \
  template LabeledMatrix<C> delta_matrix(const MPoly<C>&, const DegreeSystem&, int);          \
  template MPoly<C> delta_zero(const PolySystem<C>&);                                         \
  template MPoly<C> jacobian(const PolySystem<C>&);

MRES_INSTANTIATE_BEZOUTIAN(Integer)
MRES_INSTANTIATE_BEZOUTIAN(Rational)
MRES_INSTANTIATE_BEZOUTIAN(ParamPoly)

}  // namespace mres
