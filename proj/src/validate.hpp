// Copyright 2026 The be Authors
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

#include <functional>
#include <string>
#include <vector>

namespace be {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // worst measured quantities vs their pinned bounds
  double seconds = 0.0;
};

using CriterionReporter = std::function<void(const CriterionResult&)>;

// Runs the acceptance suite in id order.  Quick mode keeps the sub-minute
// criteria {1, 3, 4, 5, 6, 10}; the full suite adds the solver runs
// {2, 7, 8, 9}.  The reporter fires as each criterion finishes.
std::vector<CriterionResult> run_acceptance(bool quick, const CriterionReporter& reporter = {});

}  // namespace be
