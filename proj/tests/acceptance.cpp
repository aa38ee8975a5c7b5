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

// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...] [--symbolic-work N] [--seed S]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "mres/verify.hpp"

int main(int argc, char** argv) {
  mres::verify::VerifyOptions opt;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--symbolic-work" && i + 1 < argc)
      opt.symbolic_work = std::stoul(argv[++i]);
    else if (a == "--seed" && i + 1 < argc)
      opt.seed = std::stoull(argv[++i]);
    else
      ids.push_back(std::stoi(a));
  }
  if (ids.empty())
    for (int id = 1; id <= mres::verify::kCriterionCount; ++id) ids.push_back(id);
  bool all = true;
  for (int id : ids) {
    auto r = mres::verify::run_criterion(id, opt);
    std::cout << mres::verify::format_result(r) << " [" << r.seconds << "s]" << std::endl;
    all = all && r.pass;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
