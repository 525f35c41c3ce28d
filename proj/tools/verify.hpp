// Copyright 2026 The fpsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fpsearch::tools {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  std::size_t n = 1024;
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims = {2, 4, 8, 64};
  std::size_t trials = 100;
};

/// Runs the invariant battery behind `fpsearch verify`.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

struct AncillaReport {
  std::size_t trials;
  double min_fidelity;
  double full_set_fidelity;
  double empty_set_fidelity;
  bool passed;
};

AncillaReport run_ancilla_check(std::size_t n, std::size_t trials, std::uint64_t seed);

}  // namespace fpsearch::tools
