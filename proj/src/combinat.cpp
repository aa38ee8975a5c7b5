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

#include "mres/combinat.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace mres {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidArgument("integer overflow in size computation");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidArgument("integer overflow in size computation");
  return r;
}

void check_j(const DegreeSystem& ds, int j) {
  if (j < 1 || j > ds.n())
    throw InvalidArgument("polynomial index " + std::to_string(j) + " out of range 1.." +
                          std::to_string(ds.n()));
}

int exceed_count(const DegreeSystem& ds, const ExpVec& g, int skip) {
  int c = 0;
  for (int i = 1; i <= ds.n(); ++i)
    if (i != skip && g[i - 1] >= ds.d(i)) ++c;
  return c;
}

}  // namespace

DegreeSystem::DegreeSystem(std::vector<int> degrees) : d_(std::move(degrees)) {
  if (d_.empty()) throw InvalidArgument("degree system needs at least one polynomial");
  for (int x : d_)
    if (x < 1) throw InvalidArgument("degrees must be positive, got " + std::to_string(x));
}

std::int64_t DegreeSystem::degree_product() const {
  std::int64_t p = 1;
  for (int x : d_) p = checked_mul(p, x);
  return p;
}

std::int64_t DegreeSystem::degree_product_except(int i) const {
  std::int64_t p = 1;
  for (int k = 1; k <= n(); ++k)
    if (k != i) p = checked_mul(p, d(k));
  return p;
}

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  // Multiply before dividing; the running value is always C(a-b+k, k).
  std::int64_t r = 1;
  for (std::int64_t k = 1; k <= b; ++k) {
    std::int64_t num = a - b + k;
    std::int64_t g = std::gcd(r, k);
    r = checked_mul(r / g, num / (k / g));
  }
  return r;
}

std::int64_t monomial_count(int n, int u) {
  if (u < 0 || n < 1) return 0;
  return binomial(static_cast<std::int64_t>(u) + n - 1, n - 1);
}

int critical_degree(const DegreeSystem& ds) {
  int s = 0;
  for (int x : ds.degrees()) s += x - 1;
  return s;
}

std::int64_t hilbert_function(const DegreeSystem& ds, int t) {
  if (t < 0 || t > critical_degree(ds)) return 0;
  // Numerator prod (1 - Y^d_i) truncated at degree t.
  std::vector<std::int64_t> c(static_cast<std::size_t>(t) + 1, 0);
  c[0] = 1;
  for (int di : ds.degrees())
    for (int k = t; k >= di; --k) c[k] = checked_add(c[k], -c[k - di]);
  // Division by (1 - Y) is a prefix sum.
  for (int r = 0; r < ds.n(); ++r)
    for (int k = 1; k <= t; ++k) c[k] = checked_add(c[k], c[k - 1]);
  return c[t];
}

std::int64_t ideal_dim(const DegreeSystem& ds, int t) {
  if (t < 0) return 0;
  return monomial_count(ds.n(), t) - hilbert_function(ds, t);
}

std::int64_t rho_size(const DegreeSystem& ds, int t) {
  if (t < 0) throw InvalidArgument("rho_size needs t >= 0");
  return checked_add(monomial_count(ds.n(), t), ideal_dim(ds, critical_degree(ds) - t));
}

MonomialSet monomial_basis(int n, int u) {
  if (n < 1) throw InvalidArgument("monomial_basis needs n >= 1");
  return {u, SetTag::Full, monomials_of_degree(n, u)};
}

MonomialSet stj_basis(const DegreeSystem& ds, int t, int j) {
  check_j(ds, j);
  MonomialSet s{t - ds.d(j), SetTag::Stj, {}};
  for (auto& g : monomials_of_degree(ds.n(), t - ds.d(j))) {
    bool ok = true;
    for (int k = 1; k < j && ok; ++k) ok = g[k - 1] < ds.d(k);
    if (ok) s.items.push_back(std::move(g));
  }
  return s;
}

MonomialSet etj_basis(const DegreeSystem& ds, int t, int j) {
  MonomialSet s = stj_basis(ds, t, j);
  s.tag = SetTag::Etj;
  std::erase_if(s.items, [&](const ExpVec& g) { return exceed_count(ds, g, j) == 0; });
  return s;
}

MonomialSet reduced_basis(const DegreeSystem& ds, int t) {
  MonomialSet s{t, SetTag::Lambda, {}};
  for (auto& g : monomials_of_degree(ds.n(), t))
    if (exceed_count(ds, g, 0) == 0) s.items.push_back(std::move(g));
  return s;
}

MonomialSet et_rows(const DegreeSystem& ds, int t) {
  MonomialSet s{t, SetTag::EtRows, {}};
  for (auto& g : monomials_of_degree(ds.n(), t))
    if (exceed_count(ds, g, 0) >= 2) s.items.push_back(std::move(g));
  return s;
}

std::optional<TRange> determinantal_range(const DegreeSystem& ds) {
  if (ds.n() == 1) return TRange{0, std::numeric_limits<int>::max()};
  std::vector<int> d = ds.degrees();
  std::sort(d.begin(), d.end());
  int low = -ds.n();
  for (std::size_t i = 2; i < d.size(); ++i) low += d[i];
  TRange r{std::max(0, low + 1), d[0] + d[1] - 1};
  if (r.min > r.max) return std::nullopt;
  return r;
}

int minimal_t(const DegreeSystem& ds) { return critical_degree(ds) / 2; }

SizeSummary size_summary(const DegreeSystem& ds) {
  SizeSummary s;
  s.critical = critical_degree(ds);
  s.minimal_t = minimal_t(ds);
  s.min_size = rho_size(ds, s.minimal_t);
  s.classical_size = rho_size(ds, s.critical + 1);
  return s;
}

Rational size_ratio_bound(const DegreeSystem& ds) {
  std::int64_t sum = 0;
  for (int x : ds.degrees()) sum += x;
  Rational p(static_cast<long>(sum), static_cast<long>(ds.n()));
  p.canonicalize();
  if (p == 1) throw InvalidArgument("size ratio bound needs average degree above 1");
  Rational q = (p + 1) / (2 * p);
  Rational r = 2;
  for (int k = 1; k < ds.n(); ++k) r *= q;
  return r;
}

}  // namespace mres
