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

// Acceptance checks, one per numbered criterion, shared by the acceptance
// test binary and `mres verify`.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mres::verify {

struct VerifyOptions {
  std::uint64_t seed = 20260101;
  // Coefficient-operation budget per symbolic determinant in the exhaustive
  // quotient check; systems beyond it are reported unverified.
  std::size_t symbolic_work = 5000000;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 10;

std::string criterion_title(int id);
CriterionResult run_criterion(int id, const VerifyOptions& opt = {});

// "PASS 3 bezoutian slices (1,1,2): ..." on one line.
std::string format_result(const CriterionResult& r);

struct ReferenceSizeRow {
  std::vector<int> degrees;
  std::int64_t min_size;
  std::int64_t classical_size;
};

// Reference table of minimal and classical matrix sizes.
const std::vector<ReferenceSizeRow>& reference_size_table();

}  // namespace mres::verify
