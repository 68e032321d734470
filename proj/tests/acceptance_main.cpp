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

// Acceptance gate: runs every criterion with its pinned tolerances and prints
// one line per result.  Exit status 0 means the whole gate passed.

#include <cstdio>
#include <cstring>

#include "validate.hpp"

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      quick = true;
    } else {
      std::fprintf(stderr, "usage: %s [--quick]\n", argv[0]);
      return 2;
    }
  }

  int failed = 0;
  be::run_acceptance(quick, [&](const be::CriterionResult& r) {
    std::printf("[%s] %2d %-28s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  });
  if (failed > 0) {
    std::printf("acceptance: %d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("acceptance: all criteria passed\n");
  return 0;
}
