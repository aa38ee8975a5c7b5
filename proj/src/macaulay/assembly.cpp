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

#include <map>

#include "internal.hpp"

namespace mres {

namespace detail {

template <class C>
LabeledMatrix<C> assemble(const PolySystem<C>& sys, int t, const MPoly<C>* bez,
                          std::vector<Label> rows, std::vector<Label> cols) {
  const DegreeSystem& ds = sys.degrees();
  LabeledMatrix<C> m;
  m.entries = Matrix<C>(rows.size(), cols.size());
  std::map<ExpVec, std::size_t> row_mon, col_dual;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].kind == Label::Kind::Monomial)
      row_mon.emplace(rows[i].exps, i);
    else if (rows[i].kind == Label::Kind::DualMultiple)
      ++m.blocks.dual_rows;
    else
      throw InvalidArgument("unexpected row label " + rows[i].to_string());
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].kind == Label::Kind::Dual) {
      col_dual.emplace(cols[j].exps, j);
      ++m.blocks.delta_cols;
    } else if (cols[j].kind != Label::Kind::Multiple) {
      throw InvalidArgument("unexpected column label " + cols[j].to_string());
    }
  }
  m.blocks.sylvester_cols = cols.size() - m.blocks.delta_cols;
  m.blocks.top_rows = rows.size() - m.blocks.dual_rows;

  // Positions of X^gamma f_j in a monomial index.
  auto scatter = [&](const Label& l, const std::map<ExpVec, std::size_t>& index, auto&& put) {
    if (l.poly < 1 || l.poly > sys.n()) throw InvalidArgument("label " + l.to_string() + " names no polynomial");
    const auto& f = sys.f(l.poly);
    for (std::size_t k = 0; k < f.size(); ++k) {
      ExpVec e = f.exponents(k);
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += l.exps.at(v);
      auto it = index.find(e);
      if (it != index.end()) put(it->second, f.coeff(k));
    }
  };
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (cols[j].kind == Label::Kind::Multiple)
      scatter(cols[j], row_mon, [&](std::size_t i, const C& c) { m.entries(i, j) = c; });
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].kind == Label::Kind::DualMultiple)
      scatter(rows[i], col_dual, [&](std::size_t j, const C& c) { m.entries(i, j) = c; });

  if (!col_dual.empty()) {
    MPoly<C> own;
    if (!bez) {
      own = bezoutian(sys);
      bez = &own;
    }
    for (auto& [gamma, slice] : delta_slices(*bez, ds, t)) {
      auto cj = col_dual.find(gamma);
      if (cj == col_dual.end()) continue;
      for (std::size_t k = 0; k < slice.size(); ++k) {
        auto ri = row_mon.find(slice.exponents(k));
        if (ri != row_mon.end()) m.entries(ri->second, cj->second) = slice.coeff(k);
      }
    }
  }
  m.row_labels = std::move(rows);
  m.col_labels = std::move(cols);
  return m;
}

std::optional<int> signed_permutation_det(const Matrix<Integer>& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<int> perm(n, -1);
  int sign = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(m(i, j)) == 0) continue;
      if (perm[i] != -1 || abs(m(i, j)) != 1) return std::nullopt;
      perm[i] = static_cast<int>(j);
      if (sgn(m(i, j)) < 0) sign = -sign;
    }
    if (perm[i] == -1) return std::nullopt;
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (seen[static_cast<std::size_t>(p)]) return std::nullopt;
    seen[static_cast<std::size_t>(p)] = true;
  }
  return sign * permutation_sign(perm);
}

int permutation_sign(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<Label> multiple_labels(const DegreeSystem& ds, int t, bool dual, bool only_e) {
  std::vector<Label> out;
  for (int j = 1; j <= ds.n(); ++j) {
    MonomialSet s = only_e ? etj_basis(ds, t, j) : stj_basis(ds, t, j);
    for (auto& g : s.items) out.push_back(dual ? Label::dual_multiple(j, g) : Label::multiple(j, g));
  }
  return out;
}

}  // namespace detail

namespace {

std::vector<Label> monomial_labels(int n, int u, bool dual) {
  std::vector<Label> out;
  for (auto& g : monomials_of_degree(n, u)) out.push_back(dual ? Label::dual(g) : Label::monomial(g));
  return out;
}

std::vector<Label> concat(std::vector<Label> a, const std::vector<Label>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

template <class C>
LabeledMatrix<C> MacaulayAssembly<C>::extraneous() const {
  return submatrix(matrix, concat(e_rows, e_dual_rows), concat(e_dual_cols, e_cols));
}

template <class C>
LabeledMatrix<C> sylvester_block(const PolySystem<C>& sys, int t) {
  if (t < 0) throw InvalidArgument("degree t must be nonnegative");
  return detail::assemble<C>(sys, t, nullptr, monomial_labels(sys.n(), t, false),
                             detail::multiple_labels(sys.degrees(), t, false, false));
}

template <class C>
MacaulayAssembly<C> build_assembly(const PolySystem<C>& sys, int t, const MPoly<C>* bez) {
  if (t < 0) throw InvalidArgument("degree t must be nonnegative");
  const DegreeSystem& ds = sys.degrees();
  const int n = ds.n(), u = critical_degree(ds) - t;
  MacaulayAssembly<C> a;
  a.t = t;
  a.matrix = detail::assemble<C>(
      sys, t, bez, concat(monomial_labels(n, t, false), detail::multiple_labels(ds, u, true, false)),
      concat(monomial_labels(n, u, true), detail::multiple_labels(ds, t, false, false)));
  for (auto& g : et_rows(ds, t).items) a.e_rows.push_back(Label::monomial(g));
  a.e_cols = detail::multiple_labels(ds, t, false, true);
  a.e_dual_rows = detail::multiple_labels(ds, u, true, true);
  for (auto& g : et_rows(ds, u).items) a.e_dual_cols.push_back(Label::dual(g));
  if (a.matrix.rows() != a.matrix.cols() ||
      static_cast<std::int64_t>(a.matrix.rows()) != rho_size(ds, t) ||
      a.e_rows.size() != a.e_cols.size() || a.e_dual_rows.size() != a.e_dual_cols.size())
    throw Error("internal: assembly for t=" + std::to_string(t) + " is not square");
  return a;
}

template <class C>
LabeledMatrix<C> psi_tilde(const PolySystem<C>& sys, int t, const MPoly<C>* bez) {
  if (t < 0) throw InvalidArgument("degree t must be nonnegative");
  const DegreeSystem& ds = sys.degrees();
  const int n = ds.n(), u = critical_degree(ds) - t;
  std::vector<Label> rows = monomial_labels(n, t, false), cols = monomial_labels(n, u, true);
  for (int j = 1; j <= n; ++j) {
    for (auto& g : monomials_of_degree(n, u - ds.d(j))) rows.push_back(Label::dual_multiple(j, g));
    for (auto& g : monomials_of_degree(n, t - ds.d(j))) cols.push_back(Label::multiple(j, g));
  }
  return detail::assemble<C>(sys, t, bez, std::move(rows), std::move(cols));
}

template <class C>
MacaulayAssembly<C> custom_assembly(const PolySystem<C>& sys, int t,
                                    const std::vector<Label>& multiple_cols,
                                    const std::vector<Label>& dual_multiple_rows,
                                    const std::vector<Label>& e_rows, const std::vector<Label>& e_cols,
                                    const std::vector<Label>& e_dual_rows,
                                    const std::vector<Label>& e_dual_cols, const MPoly<C>* bez) {
  if (t < 0) throw InvalidArgument("degree t must be nonnegative");
  const DegreeSystem& ds = sys.degrees();
  const int n = ds.n(), u = critical_degree(ds) - t;
  for (const auto& l : multiple_cols)
    if (l.kind != Label::Kind::Multiple || l.poly < 1 || l.poly > n ||
        static_cast<int>(l.exps.size()) != n || total_degree(l.exps) != t - ds.d(l.poly))
      throw InvalidArgument("column label " + l.to_string() + " is not a degree-t multiple");
  for (const auto& l : dual_multiple_rows)
    if (l.kind != Label::Kind::DualMultiple || l.poly < 1 || l.poly > n ||
        static_cast<int>(l.exps.size()) != n || total_degree(l.exps) != u - ds.d(l.poly))
      throw InvalidArgument("row label " + l.to_string() + " is not a degree t_n-t dual multiple");
  MacaulayAssembly<C> a;
  a.t = t;
  a.matrix = detail::assemble<C>(sys, t, bez, concat(monomial_labels(n, t, false), dual_multiple_rows),
                                 concat(monomial_labels(n, u, true), multiple_cols));
  if (a.matrix.rows() != a.matrix.cols()) throw InvalidArgument("custom assembly is not square");
  a.e_rows = e_rows;
  a.e_cols = e_cols;
  a.e_dual_rows = e_dual_rows;
  a.e_dual_cols = e_dual_cols;
  (void)a.extraneous();  // validates the labels
  return a;
}

#define MRES_INSTANTIATE_ASSEMBLY(C)                                                             \
  template struct MacaulayAssembly<C>;                                                           \
  template LabeledMatrix<C> detail::assemble(const PolySystem<C>&, int, const MPoly<C>*,         \
                                             std::vector<Label>, std::vector<Label>);            \
  template LabeledMatrix<C> sylvester_block(const PolySystem<C>&, int);                          \
  template MacaulayAssembly<C> build_assembly(const PolySystem<C>&, int, const MPoly<C>*);       \
  template LabeledMatrix<C> psi_tilde(const PolySystem<C>&, int, const MPoly<C>*);               \
  template MacaulayAssembly<C> custom_assembly(                                                  \
      const PolySystem<C>&, int, const std::vector<Label>&, const std::vector<Label>&,           \
      const std::vector<Label>&, const std::vector<Label>&, const std::vector<Label>&,           \
      const std::vector<Label>&, const MPoly<C>*);

MRES_INSTANTIATE_ASSEMBLY(Integer)
MRES_INSTANTIATE_ASSEMBLY(Rational)
MRES_INSTANTIATE_ASSEMBLY(ParamPoly)

}  // namespace mres
