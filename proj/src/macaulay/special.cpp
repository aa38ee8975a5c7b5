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

namespace {

template <class C>
C with_sign(C v, int s) {
  if (s < 0) return C(-v);
  return v;
}

int sign_of(const Integer& v) { return sgn(v) < 0 ? -1 : 1; }

// f(X_1, X_2, 1) placed into a ring of nv variables at positions v1, v2.
template <class C>
MPoly<C> dehomogenize_into(const MPoly<C>& f, int nv, int v1, int v2) {
  std::vector<std::pair<ExpVec, C>> terms;
  for (std::size_t k = 0; k < f.size(); ++k) {
    ExpVec e = f.exponents(k), g(static_cast<std::size_t>(nv), 0);
    g[static_cast<std::size_t>(v1)] += e[0];
    g[static_cast<std::size_t>(v2)] += e[1];
    terms.emplace_back(std::move(g), f.coeff(k));
  }
  return MPoly<C>::from_terms(nv, std::move(terms));
}

template <class C>
MPoly<C> univariate_to_homogeneous(const std::vector<C>& a) {
  if (a.empty()) throw InvalidArgument("empty coefficient vector");
  const int d = static_cast<int>(a.size()) - 1;
  std::vector<std::pair<ExpVec, C>> terms;
  for (int j = 0; j <= d; ++j) terms.emplace_back(ExpVec{j, d - j}, a[static_cast<std::size_t>(j)]);
  return MPoly<C>::from_terms(2, std::move(terms));
}

template <class C>
std::vector<C> unit_univariate(int d, int at) {
  std::vector<C> v(static_cast<std::size_t>(d) + 1, RingTraits<C>::zero());
  v[static_cast<std::size_t>(at)] = RingTraits<C>::one();
  return v;
}

}  // namespace

template <class C>
LabeledMatrix<C> dixon_matrix(const PolySystem<C>& sys) {
  const DegreeSystem& ds = sys.degrees();
  if (ds.n() != 3 || ds.d(1) != ds.d(2) || ds.d(2) != ds.d(3))
    throw InvalidArgument("Dixon matrix needs three forms of equal degree");
  const int d = ds.d(1);
  // Variables X1, X2, Y1, Y2.
  Matrix<MPoly<C>> m(3, 3);
  for (int i = 0; i < 3; ++i) {
    const auto& f = sys.f(i + 1);
    m(0, static_cast<std::size_t>(i)) = dehomogenize_into(f, 4, 0, 1);
    m(1, static_cast<std::size_t>(i)) = dehomogenize_into(f, 4, 2, 1);
    m(2, static_cast<std::size_t>(i)) = dehomogenize_into(f, 4, 2, 3);
  }
  MPoly<C> x1 = MPoly<C>::variable(4, 0), x2 = MPoly<C>::variable(4, 1);
  MPoly<C> y1 = MPoly<C>::variable(4, 2), y2 = MPoly<C>::variable(4, 3);
  MPoly<C> bez = MPoly<C>::divide(cofactor_det(m).lifted(4), (x1 - y1) * (x2 - y2));

  std::map<ExpVec, std::vector<std::pair<ExpVec, C>>> parts;  // beta -> B_beta terms
  for (std::size_t k = 0; k < bez.size(); ++k) {
    ExpVec e = bez.exponents(k);
    parts[ExpVec{e[2], e[3]}].emplace_back(ExpVec{e[0], e[1]}, bez.coeff(k));
  }

  auto cols = monomials_of_degree(3, 2 * d - 2);
  std::map<ExpVec, std::size_t> col_index;
  LabeledMatrix<C> out;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    col_index.emplace(ExpVec{cols[j][0], cols[j][1]}, j);
    out.col_labels.push_back(Label::monomial(cols[j]));
  }
  std::vector<MPoly<C>> rows;
  for (int i = 1; i <= 3; ++i) {
    MPoly<C> f = dehomogenize_into(sys.f(i), 2, 0, 1);
    for (auto& g : monomials_of_degree(3, d - 2)) {
      rows.push_back(MPoly<C>::term(ExpVec{g[0], g[1]}, RingTraits<C>::one()) * f);
      out.row_labels.push_back(Label::multiple(i, g));
    }
  }
  for (auto& g : monomials_of_degree(3, d - 1)) {
    auto it = parts.find(ExpVec{g[0], g[1]});
    rows.push_back(it == parts.end() ? MPoly<C>(2) : MPoly<C>::from_terms(2, it->second));
    out.row_labels.push_back(Label::dual(g));
  }
  out.entries = Matrix<C>(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      auto it = col_index.find(rows[r].exponents(k));
      if (it == col_index.end()) throw Error("internal: Dixon row has a term of too high degree");
      out.entries(r, it->second) = rows[r].coeff(k);
    }
  out.blocks = {0, cols.size(), rows.size(), 0};
  return out;
}

template <class C>
ResultantValue<C> dixon_resultant(const PolySystem<C>& sys) {
  auto dm = dixon_matrix(sys);
  auto de = dixon_matrix(monomial_system<Integer>(sys.degrees()));
  auto s = detail::signed_permutation_det(de.entries);
  if (!s) throw Error("internal: Dixon matrix of the monomial system is not a permutation");
  ResultantValue<C> r;
  r.t = 2 * sys.degrees().d(1) - 2;
  r.det_m = bareiss_det(dm.entries);
  r.det_e = r.det_e_t = r.det_e_dual = RingTraits<C>::one();
  r.sign = *s;
  r.value = with_sign(r.det_m, r.sign);
  r.poly_order = r.var_order = {0, 1, 2};
  r.route = "dixon";
  return r;
}

template <class C>
PolySystem<C> homogenize_univariate(const std::vector<C>& f1, const std::vector<C>& f2) {
  std::vector<int> d{static_cast<int>(f1.size()) - 1, static_cast<int>(f2.size()) - 1};
  return PolySystem<C>(DegreeSystem(d), {univariate_to_homogeneous(f1), univariate_to_homogeneous(f2)});
}

template <class C>
Matrix<C> sylvester_matrix(const std::vector<C>& f1, const std::vector<C>& f2) {
  if (f1.size() < 2 || f2.size() < 2) throw InvalidArgument("Sylvester matrix needs positive degrees");
  const std::size_t d1 = f1.size() - 1, d2 = f2.size() - 1, n = d1 + d2;
  Matrix<C> m(n, n);
  for (std::size_t r = 0; r < d2; ++r)
    for (std::size_t k = 0; k <= d1; ++k) m(r, r + k) = f1[d1 - k];
  for (std::size_t r = 0; r < d1; ++r)
    for (std::size_t k = 0; k <= d2; ++k) m(d2 + r, r + k) = f2[d2 - k];
  return m;
}

template <class C>
Matrix<C> bezout_matrix(const std::vector<C>& f1, const std::vector<C>& f2) {
  if (f1.size() != f2.size() || f1.size() < 2)
    throw InvalidArgument("Bezout matrix needs two polynomials of equal positive degree");
  const int d = static_cast<int>(f1.size()) - 1;
  std::vector<std::pair<ExpVec, C>> terms;
  for (int p = 0; p <= d; ++p)
    for (int q = 0; q <= d; ++q) {
      C c = f1[static_cast<std::size_t>(p)] * f2[static_cast<std::size_t>(q)];
      sub_product(c, f1[static_cast<std::size_t>(q)], f2[static_cast<std::size_t>(p)]);
      terms.emplace_back(ExpVec{p, q}, std::move(c));
    }
  MPoly<C> num = MPoly<C>::from_terms(2, std::move(terms));
  MPoly<C> b = MPoly<C>::divide(num, MPoly<C>::variable(2, 0) - MPoly<C>::variable(2, 1));
  Matrix<C> m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (std::size_t k = 0; k < b.size(); ++k) {
    ExpVec e = b.exponents(k);
    m(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1])) = b.coeff(k);
  }
  return m;
}

template <class C>
C bezout_resultant(const std::vector<C>& f1, const std::vector<C>& f2) {
  const int d = static_cast<int>(f1.size()) - 1;
  auto e = bezout_matrix(unit_univariate<Integer>(d, d), unit_univariate<Integer>(d, 0));
  return with_sign(bareiss_det(bezout_matrix(f1, f2)), sign_of(bareiss_det(e)));
}

template <class C>
ResultantValue<C> univariate_resultant(const std::vector<C>& f1, const std::vector<C>& f2, int t) {
  PolySystem<C> sys = homogenize_univariate(f1, f2);
  const int top = sys.degrees().d(1) + sys.degrees().d(2) - 1;
  if (t < 0 || t > top)
    throw InvalidArgument("univariate formulas need 0 <= t <= " + std::to_string(top));
  auto r = resultant_quotient(sys, build_assembly(sys, t));
  if (!r || r->det_e != RingTraits<C>::one())
    throw Error("internal: univariate formula has an extraneous factor");
  r->route = "univariate";
  return *r;
}

template <class C>
LabeledMatrix<C> ternary_quadric_matrix(const PolySystem<C>& sys) {
  const DegreeSystem& ds = sys.degrees();
  if (ds != DegreeSystem({2, 2, 2})) throw InvalidArgument("expected three ternary quadrics");
  MPoly<C> j = jacobian(sys);
  std::vector<MPoly<C>> rows(sys.polys());
  for (int k = 0; k < 3; ++k) rows.push_back(derivative(j, k));
  auto cols = monomials_of_degree(3, 2);
  LabeledMatrix<C> m;
  m.entries = Matrix<C>(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) m.entries(r, c) = rows[r].coeff_of(cols[c]);
  for (int i = 1; i <= 3; ++i) m.row_labels.push_back(Label::named("f" + std::to_string(i)));
  for (int i = 1; i <= 3; ++i) m.row_labels.push_back(Label::named("dJ/dX" + std::to_string(i)));
  for (auto& c : cols) m.col_labels.push_back(Label::monomial(c));
  m.blocks = {0, 6, 6, 0};
  return m;
}

template <class C>
ResultantValue<C> ternary_quadric_resultant(const PolySystem<C>& sys) {
  Integer de = bareiss_det(ternary_quadric_matrix(monomial_system<Integer>(sys.degrees())).entries);
  if (abs(de) != 512) throw Error("internal: ternary quadric matrix at the monomial system");
  ResultantValue<C> r;
  r.t = 1;
  r.det_m = bareiss_det(ternary_quadric_matrix(sys).entries);
  r.det_e = r.det_e_t = r.det_e_dual = RingTraits<C>::from_int(512);
  r.sign = sign_of(de);
  r.value = with_sign(exact_div(r.det_m, r.det_e), r.sign);
  r.poly_order = r.var_order = {0, 1, 2};
  r.route = "ternary quadric";
  return r;
}

template <class C>
MacaulayAssembly<C> jacobian_assembly(const PolySystem<C>& sys) {
  const int tn = critical_degree(sys.degrees());
  auto a = build_assembly(sys, tn);
  if (a.matrix.blocks.delta_cols != 1) throw Error("internal: M_{t_n} must have one Bezoutian column");
  MPoly<C> j = jacobian(sys);
  for (std::size_t r = 0; r < a.matrix.rows(); ++r)
    a.matrix.entries(r, 0) = a.matrix.row_labels[r].kind == Label::Kind::Monomial
                                 ? j.coeff_of(a.matrix.row_labels[r].exps)
                                 : RingTraits<C>::zero();
  a.matrix.col_labels[0] = Label::named("J");
  return a;
}

template <class C>
ResultantValue<C> jacobian_resultant(const PolySystem<C>& sys) {
  const DegreeSystem& ds = sys.degrees();
  auto ae = jacobian_assembly(monomial_system<Integer>(ds));
  int s = sign_of(bareiss_det(ae.matrix.entries)) * sign_of(bareiss_det(ae.e_block().entries));
  auto a = jacobian_assembly(sys);
  ResultantValue<C> r;
  r.t = a.t;
  r.det_e = r.det_e_t = bareiss_det(a.e_block());
  r.det_e_dual = RingTraits<C>::one();
  if (is_zero(r.det_e)) throw DegenerateSpecialization("extraneous factor of the Jacobian formula vanishes");
  r.det_m = bareiss_det(a.matrix);
  r.sign = s;
  C q = with_sign(exact_div(r.det_m, r.det_e), s);
  r.value = exact_div(q, RingTraits<C>::from_int(static_cast<long>(ds.degree_product())));
  r.poly_order.resize(static_cast<std::size_t>(ds.n()));
  for (int i = 0; i < ds.n(); ++i) r.poly_order[static_cast<std::size_t>(i)] = i;
  r.var_order = r.poly_order;
  r.route = "jacobian";
  return r;
}

#define MRES_INSTANTIATE_SPECIAL(C)                                                             \
  template LabeledMatrix<C> dixon_matrix(const PolySystem<C>&);                                 \
  template ResultantValue<C> dixon_resultant(const PolySystem<C>&);                             \
  template PolySystem<C> homogenize_univariate(const std::vector<C>&, const std::vector<C>&);   \
  template Matrix<C> sylvester_matrix(const std::vector<C>&, const std::vector<C>&);            \
  template Matrix<C> bezout_matrix(const std::vector<C>&, const std::vector<C>&);               \
  template C bezout_resultant(const std::vector<C>&, const std::vector<C>&);                    \
  template ResultantValue<C> univariate_resultant(const std::vector<C>&, const std::vector<C>&, \
                                                  int);                                         \
  template LabeledMatrix<C> ternary_quadric_matrix(const PolySystem<C>&);                       \
  template ResultantValue<C> ternary_quadric_resultant(const PolySystem<C>&);                   \
  template MacaulayAssembly<C> jacobian_assembly(const PolySystem<C>&);                         \
  template ResultantValue<C> jacobian_resultant(const PolySystem<C>&);

MRES_INSTANTIATE_SPECIAL(Integer)
MRES_INSTANTIATE_SPECIAL(Rational)
MRES_INSTANTIATE_SPECIAL(ParamPoly)

}  // namespace mres
