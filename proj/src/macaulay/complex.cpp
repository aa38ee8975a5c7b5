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

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == k) {
      out.push_back(s);
      return;
    }
    for (int i = from; i <= n; ++i) {
      s[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

int subset_degree(const DegreeSystem& ds, const std::vector<int>& s) {
  int d = 0;
  for (int i : s) d += ds.d(i);
  return d;
}

std::int64_t koszul_rank(const DegreeSystem& ds, int u, int j) {
  std::int64_t r = 0;
  for (const auto& s : subsets(ds.n(), j)) r += monomial_count(ds.n(), u - subset_degree(ds, s));
  return r;
}

std::string subset_text(const std::vector<int>& s) {
  std::string out = "e[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

// Basis of K(u)^{-j}: pairs (I, gamma) with |gamma| = u - d_I. Degree 0 and 1
// use the labels of psi_tilde so the blocks line up.
std::vector<Label> koszul_basis(const DegreeSystem& ds, int u, int j, bool dual) {
  std::vector<Label> out;
  for (const auto& s : subsets(ds.n(), j)) {
    for (auto& g : monomials_of_degree(ds.n(), u - subset_degree(ds, s))) {
      if (j == 0)
        out.push_back(dual ? Label::dual(g) : Label::monomial(g));
      else if (j == 1)
        out.push_back(dual ? Label::dual_multiple(s[0], g) : Label::multiple(s[0], g));
      else
        out.push_back(Label::named(dual ? "(" + subset_text(s) + "*" + Label::monomial(g).to_string() + ")*"
                                        : subset_text(s) + "*" + Label::monomial(g).to_string()));
    }
  }
  return out;
}

// Koszul differential K(u)^{-j} -> K(u)^{-(j-1)}:
// (I, m) -> sum_k (-1)^k f_{i_k} m in component I \ {i_k}.
template <class C>
Matrix<C> koszul_matrix(const PolySystem<C>& sys, int u, int j) {
  const DegreeSystem& ds = sys.degrees();
  const int n = ds.n();
  std::map<std::pair<std::vector<int>, ExpVec>, std::size_t> target;
  std::size_t rows = 0;
  for (const auto& s : subsets(n, j - 1))
    for (auto& g : monomials_of_degree(n, u - subset_degree(ds, s))) target.emplace(std::make_pair(s, g), rows++);
  std::size_t cols = 0;
  for (const auto& s : subsets(n, j)) cols += static_cast<std::size_t>(monomial_count(n, u - subset_degree(ds, s)));
  Matrix<C> m(rows, cols);
  std::size_t c = 0;
  for (const auto& s : subsets(n, j)) {
    for (auto& g : monomials_of_degree(n, u - subset_degree(ds, s))) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<int> rest = s;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        const auto& f = sys.f(s[k]);
        for (std::size_t q = 0; q < f.size(); ++q) {
          ExpVec e = f.exponents(q);
          for (std::size_t v = 0; v < e.size(); ++v) e[v] += g[v];
          C& x = m(target.at({rest, e}), c);
          if (k % 2)
            x -= f.coeff(q);
          else
            x += f.coeff(q);
        }
      }
      ++c;
    }
  }
  return m;
}

// [0; b] or [0, b]: pads b with zero rows on top or zero columns on the left.
template <class C>
Matrix<C> pad(const Matrix<C>& b, std::size_t top, std::size_t left) {
  Matrix<C> m(b.rows() + top, b.cols() + left);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(i + top, j + left) = b(i, j);
  return m;
}

void check_coupled_t(const DegreeSystem& ds, int t) {
  if (t < 0 || t > critical_degree(ds))
    throw InvalidArgument("the coupled complex needs 0 <= t <= t_n, got t=" + std::to_string(t));
}

}  // namespace

std::int64_t ComplexProfile::rank_at(int k) const {
  if (k < lowest || k > highest()) return 0;
  return ranks[static_cast<std::size_t>(k - lowest)];
}

bool ComplexProfile::determinantal() const {
  for (int k = lowest; k <= highest(); ++k)
    if (k != -1 && k != 0 && rank_at(k) != 0) return false;
  return true;
}

ComplexProfile complex_profile(const DegreeSystem& ds, int t) {
  check_coupled_t(ds, t);
  const int n = ds.n(), u = critical_degree(ds) - t;
  ComplexProfile p;
  p.t = t;
  p.lowest = -n;
  for (int k = -n; k <= n - 1; ++k) {
    std::int64_t r;
    if (k <= -2)
      r = koszul_rank(ds, t, -k);
    else if (k == -1)
      r = monomial_count(n, u) + koszul_rank(ds, t, 1);
    else if (k == 0)
      r = monomial_count(n, t) + koszul_rank(ds, u, 1);
    else
      r = koszul_rank(ds, u, k + 1);
    p.ranks.push_back(r);
  }
  return p;
}

template <class C>
std::vector<LabeledMatrix<C>> complex_differentials(const PolySystem<C>& sys, int t) {
  const DegreeSystem& ds = sys.degrees();
  check_coupled_t(ds, t);
  const int n = ds.n(), u = critical_degree(ds) - t;
  auto basis = [&](int k) {
    if (k <= -2) return koszul_basis(ds, t, -k, false);
    if (k >= 1) return koszul_basis(ds, u, k + 1, true);
    std::vector<Label> a = koszul_basis(ds, k == -1 ? u : t, 0, k == -1);
    std::vector<Label> b = koszul_basis(ds, k == -1 ? t : u, 1, k == 0);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  std::vector<LabeledMatrix<C>> out;
  for (int k = -n; k <= n - 2; ++k) {
    LabeledMatrix<C> m;
    if (k == -1) {
      m = psi_tilde(sys, t);
    } else {
      if (k <= -3)
        m.entries = koszul_matrix(sys, t, -k);
      else if (k == -2)
        m.entries = pad(koszul_matrix(sys, t, 2), static_cast<std::size_t>(monomial_count(n, u)), 0);
      else if (k == 0)
        m.entries = pad(koszul_matrix(sys, u, 2).transposed(), 0, static_cast<std::size_t>(monomial_count(n, t)));
      else
        m.entries = koszul_matrix(sys, u, k + 2).transposed();
      m.row_labels = basis(k + 1);
      m.col_labels = basis(k);
      m.blocks = {0, m.entries.cols(), m.entries.rows(), 0};
    }
    out.push_back(std::move(m));
  }
  return out;
}

template <class C>
ExactnessReport exactness_check(const PolySystem<C>& sys, int t) {
  ExactnessReport rep;
  rep.t = t;
  rep.profile = complex_profile(sys.degrees(), t);
  auto diffs = complex_differentials(sys, t);
  for (const auto& d : diffs) rep.differential_ranks.push_back(rank_over_fractions(d.entries));
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k) {
    Matrix<C> prod = diffs[k + 1].entries * diffs[k].entries;
    for (std::size_t i = 0; i < prod.rows() && rep.is_complex; ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j)
        if (!is_zero(prod(i, j))) {
          rep.is_complex = false;
          break;
        }
  }
  const int lo = rep.profile.lowest;
  for (int k = lo; k <= rep.profile.highest(); ++k) {
    // d_k leaves C^k, d_{k-1} enters it.
    std::size_t out_rank = k - lo < static_cast<int>(diffs.size()) ? rep.differential_ranks[static_cast<std::size_t>(k - lo)] : 0;
    std::size_t in_rank = k - 1 >= lo ? rep.differential_ranks[static_cast<std::size_t>(k - 1 - lo)] : 0;
    bool ok = static_cast<std::int64_t>(out_rank + in_rank) == rep.profile.rank_at(k);
    rep.exact_at.push_back(ok);
    rep.exact = rep.exact && ok;
  }
  rep.exact = rep.exact && rep.is_complex;
  return rep;
}

template std::vector<LabeledMatrix<Integer>> complex_differentials(const PolySystem<Integer>&, int);
template std::vector<LabeledMatrix<Rational>> complex_differentials(const PolySystem<Rational>&, int);
template std::vector<LabeledMatrix<ParamPoly>> complex_differentials(const PolySystem<ParamPoly>&, int);
template ExactnessReport exactness_check(const PolySystem<Integer>&, int);
template ExactnessReport exactness_check(const PolySystem<Rational>&, int);

}  // namespace mres
