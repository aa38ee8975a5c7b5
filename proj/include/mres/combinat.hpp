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

// Degree bookkeeping for a system of n homogeneous forms: critical degree,
// Hilbert function of a complete intersection, matrix sizes, and the monomial
// index sets used to lay out the Macaulay-style matrices.
//
// Counts are std::int64_t and every arithmetic step is overflow-checked;
// degree systems whose sizes overflow throw InvalidArgument.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mres/corering.hpp"

namespace mres {

class DegreeSystem {
 public:
  explicit DegreeSystem(std::vector<int> degrees);

  int n() const noexcept { return static_cast<int>(d_.size()); }
  // 1-based, as in d_1..d_n.
  int d(int i) const { return d_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& degrees() const noexcept { return d_; }
  // Product of all degrees, and of all degrees but d_i.
  std::int64_t degree_product() const;
  std::int64_t degree_product_except(int i) const;

  bool operator==(const DegreeSystem& o) const = default;

 private:
  std::vector<int> d_;
};

// C(a, b) with overflow checking; 0 when b < 0 or b > a.
std::int64_t binomial(std::int64_t a, std::int64_t b);
// Number of monomials of degree u in n variables (0 for u < 0).
std::int64_t monomial_count(int n, int u);

int critical_degree(const DegreeSystem& ds);
std::int64_t hilbert_function(const DegreeSystem& ds, int t);
std::int64_t ideal_dim(const DegreeSystem& ds, int t);
// Throws InvalidArgument for negative t.
std::int64_t rho_size(const DegreeSystem& ds, int t);

enum class SetTag { Full, Stj, Etj, Lambda, EtRows };

struct MonomialSet {
  int degree = 0;
  SetTag tag = SetTag::Full;
  std::vector<ExpVec> items;

  std::size_t size() const noexcept { return items.size(); }
};

MonomialSet monomial_basis(int n, int u);
// S^{t,j}: degree t-d_j, gamma_k < d_k for k < j. j is 1-based.
MonomialSet stj_basis(const DegreeSystem& ds, int t, int j);
// E^{t,j}: members of S^{t,j} with gamma_i >= d_i for some i != j.
MonomialSet etj_basis(const DegreeSystem& ds, int t, int j);
// Lambda_t: degree t, gamma_k < d_k for every k.
MonomialSet reduced_basis(const DegreeSystem& ds, int t);
// Degree-t monomials with at least two indices i with gamma_i >= d_i.
MonomialSet et_rows(const DegreeSystem& ds, int t);

// Inclusive range of t for which M_t has no extraneous factor. For n = 1
// every t qualifies and max is INT_MAX.
struct TRange {
  int min = 0;
  int max = 0;
  bool contains(int t) const noexcept { return min <= t && t <= max; }
};
std::optional<TRange> determinantal_range(const DegreeSystem& ds);

int minimal_t(const DegreeSystem& ds);

// One row of a size comparison: rho at minimal_t against Macaulay's
// classical size rho(t_n + 1).
struct SizeSummary {
  int critical = 0;
  int minimal_t = 0;
  std::int64_t min_size = 0;
  std::int64_t classical_size = 0;
};
SizeSummary size_summary(const DegreeSystem& ds);

// 2 q^(n-1) with p the average degree and q = (p+1)/(2p). Throws
// InvalidArgument when p = 1.
Rational size_ratio_bound(const DegreeSystem& ds);

}  // namespace mres
