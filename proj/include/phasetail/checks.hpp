/*
   Copyright 2026 The phasetail authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PHASETAIL_CHECKS_HPP
#define PHASETAIL_CHECKS_HPP

#include <string>
#include <vector>

namespace phasetail::checks {

/// End-to-end verification suite: every tolerance is pinned in code, every
/// input seeded, so a run is reproducible and CI-stable.
struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

std::vector<CheckResult> run_all();

}  // namespace phasetail::checks

#endif
