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
#include <numeric>

#include "internal.hpp"

namespace mres {

namespace {

template <class C>
C with_sign(C v, int s) {
  if (s < 0) return C(-v);
  return v;
}

// det of [[X, E_t], [E', 0]] with E_t p x p in the top right and E' q x q in
// the bottom left.
template <class C>
C extraneous_det(const MacaulayAssembly<C>& a, C* det_t, C* det_dual, std::size_t max_work) {
  *det_t = bareiss_det(a.e_block(), max_work);
  *det_dual = bareiss_det(a.e_dual_block(), max_work);
  const std::size_t p = a.e_rows.size(), q = a.e_dual_rows.size();
  return with_sign(C(*det_t * *det_dual), (p * q) % 2 ? -1 : 1);
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

int normalization_sign(const DegreeSystem& ds, int t) {
  auto e = monomial_system<Integer>(ds);
  return normalization_sign(ds, build_assembly(e, t));
}

template <class C>
int normalization_sign(const DegreeSystem& ds, const MacaulayAssembly<C>& shape) {
  auto e = monomial_system<Integer>(ds);
  MacaulayAssembly<Integer> a;
  a.t = shape.t;
  a.matrix = detail::assemble<Integer>(e, shape.t, nullptr, shape.matrix.row_labels,
                                       shape.matrix.col_labels);
  a.e_rows = shape.e_rows;
  a.e_cols = shape.e_cols;
  a.e_dual_rows = shape.e_dual_rows;
  a.e_dual_cols = shape.e_dual_cols;
  auto dm = detail::signed_permutation_det(a.matrix.entries);
  auto de = detail::signed_permutation_det(a.extraneous().entries);
  if (!dm || !de)
    throw InvalidArgument("matrix shape does not specialize to a permutation at the monomial system");
  return *dm * *de;
}

template <class C>
std::optional<ResultantValue<C>> resultant_quotient(const PolySystem<C>& sys,
                                                    const MacaulayAssembly<C>& a,
                                                    const ResultantOptions& opt) {
  ResultantValue<C> r;
  r.t = a.t;
  const std::size_t budget = std::is_same_v<C, ParamPoly> ? opt.max_symbolic_work : 0;
  r.det_e = extraneous_det(a, &r.det_e_t, &r.det_e_dual, budget);
  if (is_zero(r.det_e)) return std::nullopt;
  r.det_m = bareiss_det(a.matrix, budget);
  r.sign = opt.normalize_sign ? normalization_sign(sys.degrees(), a) : 1;
  r.value = with_sign(exact_div(r.det_m, r.det_e), r.sign);
  r.poly_order.resize(static_cast<std::size_t>(sys.n()));
  std::iota(r.poly_order.begin(), r.poly_order.end(), 0);
  r.var_order = r.poly_order;
  r.route = "quotient";
  return r;
}

ResultantValue<ParamPoly> resultant_generic(const PolySystem<ParamPoly>& sys, int t,
                                            const ResultantOptions& opt,
                                            const MPoly<ParamPoly>* bez) {
  std::int64_t size = rho_size(sys.degrees(), t);
  if (size > opt.max_symbolic_size)
    throw SymbolicBudgetExceeded("symbolic matrix of size " + std::to_string(size) +
                                 " exceeds the limit " + std::to_string(opt.max_symbolic_size));
  auto r = resultant_quotient(sys, build_assembly(sys, t, bez), opt);
  if (!r) throw Error("internal: extraneous factor vanishes for a parametric system");
  return *r;
}

template <class C>
ResultantValue<C> resultant_specialized(const PolySystem<C>& sys, std::optional<int> t,
                                        const ResultantOptions& opt) {
  const DegreeSystem& ds = sys.degrees();
  const int n = ds.n(), tn = critical_degree(ds);
  if (t && *t < 0) throw InvalidArgument("degree t must be nonnegative");

  std::vector<int> ts{t ? *t : minimal_t(ds)};
  if (ts[0] != tn + 1) ts.push_back(tn + 1);
  std::vector<int> rest;
  for (int u = 0; u <= tn + 1; ++u)
    if (std::find(ts.begin(), ts.end(), u) == ts.end()) rest.push_back(u);
  std::stable_sort(rest.begin(), rest.end(),
                   [&](int a, int b) { return rho_size(ds, a) < rho_size(ds, b); });
  ts.insert(ts.end(), rest.begin(), rest.end());

  // Identity first, then polynomial orders, then variable orders, then both.
  auto perms = permutations_of(n);
  std::vector<std::pair<std::size_t, std::size_t>> orders{{0, 0}};
  for (std::size_t p = 1; p < perms.size(); ++p) orders.emplace_back(p, 0);
  for (std::size_t v = 1; v < perms.size(); ++v) orders.emplace_back(0, v);
  for (std::size_t p = 1; p < perms.size(); ++p)
    for (std::size_t v = 1; v < perms.size(); ++v) orders.emplace_back(p, v);

  const std::int64_t dprod = ds.degree_product();
  int attempts = 0;
  for (auto [pi, vi] : orders) {
    const auto& pp = perms[pi];
    const auto& vp = perms[vi];
    PolySystem<C> g = sys.permuted_polys(pp).permuted_vars(vp);
    std::optional<MPoly<C>> bez;
    for (int u : ts) {
      if (attempts >= opt.max_attempts) break;
      ++attempts;
      if (u <= tn && !bez) bez = bezoutian(g);
      auto r = resultant_quotient(g, build_assembly(g, u, bez ? &*bez : nullptr), opt);
      if (!r) continue;
      int s = detail::permutation_sign(pp) * detail::permutation_sign(vp);
      if (dprod % 2 == 0) s = 1;
      if (opt.normalize_sign && s < 0) r->value = C(-r->value);
      r->poly_order = pp;
      r->var_order = vp;
      r->attempts = attempts;
      r->route = pi == 0 && vi == 0 ? "quotient" : "quotient (permuted)";
      return *r;
    }
  }
  throw DegenerateSpecialization("extraneous factor vanished in all " + std::to_string(attempts) +
                                 " attempts");
}

template <class C>
ResultantValue<C> classical_macaulay(const PolySystem<C>& sys, const ResultantOptions& opt) {
  const int t = critical_degree(sys.degrees()) + 1;
  ResultantValue<C> r;
  if constexpr (std::is_same_v<C, ParamPoly>)
    r = resultant_generic(sys, t, opt);
  else
    r = resultant_specialized(sys, t, opt);
  r.route = "classical";
  return r;
}

std::vector<std::pair<int, int>> coefficient_degrees(const ParamPoly& r, const DegreeSystem& ds) {
  std::vector<int> start{0};
  for (int i = 1; i <= ds.n(); ++i)
    start.push_back(start.back() + static_cast<int>(monomial_count(ds.n(), ds.d(i))));
  if (r.nvars() != 0 && r.nvars() != start.back())
    throw VariableCountMismatch("polynomial is not over the generic parameters of this system");
  std::vector<std::pair<int, int>> out(static_cast<std::size_t>(ds.n()), {-1, -1});
  for (std::size_t k = 0; k < r.size(); ++k) {
    auto e = r.raw_exponents(k);
    for (int i = 0; i < ds.n(); ++i) {
      int deg = 0;
      for (int v = start[static_cast<std::size_t>(i)]; v < start[static_cast<std::size_t>(i) + 1] && v < static_cast<int>(e.size()); ++v)
        deg += e[static_cast<std::size_t>(v)];
      auto& [lo, hi] = out[static_cast<std::size_t>(i)];
      lo = lo < 0 ? deg : std::min(lo, deg);
      hi = std::max(hi, deg);
    }
  }
  return out;
}

#define MRES_INSTANTIATE_RESULTANT(C)                                                            \
  template int normalization_sign(const DegreeSystem&, const MacaulayAssembly<C>&);              \
  template std::optional<ResultantValue<C>> resultant_quotient(                                  \
      const PolySystem<C>&, const MacaulayAssembly<C>&, const ResultantOptions&);                \
  template ResultantValue<C> classical_macaulay(const PolySystem<C>&, const ResultantOptions&);

MRES_INSTANTIATE_RESULTANT(Integer)
MRES_INSTANTIATE_RESULTANT(Rational)
MRES_INSTANTIATE_RESULTANT(ParamPoly)

template ResultantValue<Integer> resultant_specialized(const PolySystem<Integer>&, std::optional<int>,
                                                       const ResultantOptions&);
template ResultantValue<Rational> resultant_specialized(const PolySystem<Rational>&, std::optional<int>,
                                                        const ResultantOptions&);

}  // namespace mres
