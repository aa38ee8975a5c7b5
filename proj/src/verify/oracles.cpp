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

#include "mres/oracles.hpp"

#include <functional>

namespace mres::oracle {

Rational gauss_det(Matrix<Rational> m) {
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

Rational gauss_det(const Matrix<Integer>& m) {
  Matrix<Rational> q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return gauss_det(std::move(q));
}

std::size_t gauss_rank(Matrix<Rational> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

Rational sylvester_resultant(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t p = a.size() - 1, q = b.size() - 1, n = p + q;
  Matrix<Rational> s(n, n);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t k = 0; k <= p; ++k) s(i, i + k) = a[p - k];
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k <= q; ++k) s(q + i, i + k) = b[q - k];
  return gauss_det(std::move(s));
}

std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // Lagrange basis polynomial for node i.
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < n; ++k) out[k] += basis[k] * ys[i] / denom;
  }
  return out;
}

std::int64_t count_reduced(const std::vector<int>& d, int t) {
  std::function<std::int64_t(std::size_t, int)> rec = [&](std::size_t i, int left) -> std::int64_t {
    if (i == d.size()) return left == 0 ? 1 : 0;
    std::int64_t s = 0;
    for (int g = 0; g < d[i] && g <= left; ++g) s += rec(i + 1, left - g);
    return s;
  };
  return t < 0 ? 0 : rec(0, t);
}

std::int64_t count_monomials(int n, int t) {
  std::function<std::int64_t(int, int)> rec = [&](int i, int left) -> std::int64_t {
    if (i == n - 1) return 1;
    std::int64_t s = 0;
    for (int g = 0; g <= left; ++g) s += rec(i + 1, left - g);
    return s;
  };
  return t < 0 ? 0 : rec(0, t);
}

ParamPoly evaluate(const MPoly<ParamPoly>& f, const std::vector<ParamPoly>& point) {
  ParamPoly acc;
  for (std::size_t k = 0; k < f.size(); ++k) {
    ParamPoly term = f.coeff(k);
    auto e = f.exponents(k);
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int p = 0; p < e[v]; ++p) term = term * point[v];
    acc += term;
  }
  return acc;
}

Integer evaluate(const MPoly<Integer>& f, const std::vector<Integer>& point) {
  Integer acc(0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    Integer term = f.coeff(k);
    auto e = f.exponents(k);
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int p = 0; p < e[v]; ++p) term *= point[v];
    acc += term;
  }
  return acc;
}

ParamPoly linear_linear_quadric(const PolySystem<ParamPoly>& sys) {
  auto coeff = [&](int i, int var) {
    ExpVec e(3, 0);
    e[static_cast<std::size_t>(var)] = 1;
    return sys.f(i).coeff_of(e);
  };
  ParamPoly a1 = coeff(1, 0), a2 = coeff(1, 1), a3 = coeff(1, 2);
  ParamPoly b1 = coeff(2, 0), b2 = coeff(2, 1), b3 = coeff(2, 2);
  std::vector<ParamPoly> cross{a2 * b3 - a3 * b2, -(a1 * b3 - a3 * b1), a1 * b2 - a2 * b1};
  return evaluate(sys.f(3), cross);
}

std::vector<Integer> random_values(std::size_t count, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(dist(rng));
  return out;
}

PolySystem<Integer> random_system(const DegreeSystem& ds, std::mt19937_64& rng, int bound) {
  const int n = ds.n();
  std::vector<MPoly<Integer>> polys;
  for (int i = 1; i <= n; ++i) {
    auto mons = monomials_of_degree(n, ds.d(i));
    MPoly<Integer> f;
    while (f.is_zero()) {
      auto vals = random_values(mons.size(), rng, bound);
      std::vector<std::pair<ExpVec, Integer>> terms;
      for (std::size_t k = 0; k < mons.size(); ++k) terms.emplace_back(mons[k], vals[k]);
      f = MPoly<Integer>::from_terms(n, std::move(terms));
    }
    polys.push_back(std::move(f));
  }
  return PolySystem<Integer>(ds, std::move(polys));
}

}  // namespace mres::oracle
