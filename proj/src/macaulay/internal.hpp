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

#pragma once

#include <optional>
#include <vector>

#include "mres/macaulay.hpp"

namespace mres::detail {

// Fills a matrix for the given labels: monomial and dual multiple rows,
// dual monomial and multiple columns. Entries whose partner label is absent
// are dropped.
template <class C>
LabeledMatrix<C> assemble(const PolySystem<C>& sys, int t, const MPoly<C>* bez,
                          std::vector<Label> rows, std::vector<Label> cols);

// Determinant of a matrix with exactly one nonzero entry, +-1, in each row
// and column; nullopt for any other matrix.
std::optional<int> signed_permutation_det(const Matrix<Integer>& m);

int permutation_sign(const std::vector<int>& perm);

std::vector<Label> multiple_labels(const DegreeSystem& ds, int t, bool dual, bool only_e);

}  // namespace mres::detail
