// Copyright 2026 The dill-series Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Named, seeded law checks over every module.

#ifndef DILL_LAWS_HPP
#define DILL_LAWS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dill {

inline constexpr std::size_t kLawMaxDim = 3;
inline constexpr unsigned kLawMaxDegree = 6;
/// Laws that build digging matrices run at most at these sizes.
inline constexpr std::size_t kRhoLawMaxDim = 2;
inline constexpr unsigned kRhoLawMaxDegree = 2;

struct LawConfig {
  std::size_t max_dim = 3;
  unsigned max_degree = 5;
  std::uint64_t seed = 20261016;
  unsigned samples = 12;
  /// Per-law tolerance replacing the declared default.
  std::map<std::string, double> tolerance_overrides;
  /// Added to one linear coefficient of every composite the harness builds.
  /// Only for mutation testing: any nonzero value should make laws fail.
  double compose_perturbation = 0.0;
  /// Run laws on worker threads. Results do not depend on this.
  bool parallel = true;
};

/// The sizes a law actually ran at (after per-law caps).
struct LawParams {
  std::size_t max_dim = 0;
  unsigned max_degree = 0;
  std::uint64_t seed = 0;
  unsigned samples = 0;
};

struct LawReport {
  std::string name;
  std::string module;
  LawParams params;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct LawInfo {
  std::string name;
  std::string module;
  double tolerance;
  std::string statement;
};

/// Every declared law, in report order.
const std::vector<LawInfo>& law_catalog();

/// Throws Error naming every violated gate.
void validate_config(const LawConfig& config);

/// One law by name; throws Error for an unknown name.
LawReport run_law(std::string_view name, const LawConfig& config);

/// All laws, one report each, in catalog order.
std::vector<LawReport> run_suite(const LawConfig& config);

/// Fixed-width table with one row per report and a pass count footer.
std::string summary_table(std::span<const LawReport> reports);

}  // namespace dill

#endif  // DILL_LAWS_HPP
