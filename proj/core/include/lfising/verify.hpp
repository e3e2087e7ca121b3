// Copyright 2026 The lfising Authors
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

#ifndef LFISING_VERIFY_HPP
#define LFISING_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lfising {

struct VerifyOptions {
  std::uint64_t seed = 20250714;
  int q = 2;
  /// Test hook: added to every analytic omega_k the suite compares against.
  double omega_perturbation = 0.0;
  std::vector<int> sizes = {4, 6, 8};
};

struct CheckResult {
  std::string module;
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs every module invariant against the dense oracles. Checks are independent, so a
/// failing one does not stop the rest.
std::vector<CheckResult> run_invariant_suite(const VerifyOptions& options);

}  // namespace lfising

#endif  // LFISING_VERIFY_HPP
