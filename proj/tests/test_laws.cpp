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


#include <doctest.h>

#include <cstring>
#include <set>

#include "dill/error.hpp"
#include "dill/laws.hpp"

namespace {

const std::vector<dill::LawReport>& default_reports() {
  static const std::vector<dill::LawReport> reports = dill::run_suite(dill::LawConfig{});
  return reports;
}

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("every declared law reports once, in declaration order") {
  const auto& catalog = dill::law_catalog();
  const auto& reports = default_reports();
  REQUIRE(reports.size() == catalog.size());
  CHECK(catalog.size() == 56);
  std::set<std::string> names;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].name == catalog[i].name);
    CHECK(reports[i].module == catalog[i].module);
    names.insert(reports[i].name);
  }
  CHECK(names.size() == catalog.size());
}

TEST_CASE("default configuration passes every law") {
  for (const auto& r : default_reports()) {
    CAPTURE(r.name);
    CAPTURE(r.max_error);
    CHECK(r.pass);
    CHECK(r.max_error <= r.tolerance);
  }
}

TEST_CASE("identical configuration gives bit-identical errors") {
  dill::LawConfig serial;
  serial.parallel = false;
  const auto again = dill::run_suite(serial);
  const auto& first = default_reports();
  REQUIRE(again.size() == first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CAPTURE(first[i].name);
    CHECK(bit_equal(again[i].max_error, first[i].max_error));
  }
}

TEST_CASE("verdicts are stable under a seed change") {
  for (std::uint64_t seed : {1ull, 7ull, 123456789ull}) {
    dill::LawConfig cfg;
    cfg.seed = seed;
    const auto reports = dill::run_suite(cfg);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      CAPTURE(seed);
      CAPTURE(reports[i].name);
      CHECK(reports[i].pass == default_reports()[i].pass);
    }
  }
}

TEST_CASE("a corrupted composition is caught") {
  dill::LawConfig cfg;
  cfg.compose_perturbation = 1e-3;
  CHECK_FALSE(dill::run_law("compose_associativity", cfg).pass);
  CHECK_FALSE(dill::run_law("compose_oracle", cfg).pass);
  // Laws that never compose are unaffected.
  CHECK(dill::run_law("theta_extraction", cfg).pass);
}

TEST_CASE("laws involving digging run on the small grid") {
  for (const char* name : {"comonad_coassociativity", "comonad_counit_outer", "monoidal_strength", "coder_rho_nabla"}) {
    const auto r = dill::run_law(name, dill::LawConfig{});
    CAPTURE(name);
    CHECK(r.params.max_dim <= dill::kRhoLawMaxDim);
    CHECK(r.params.max_degree <= dill::kRhoLawMaxDegree);
    CHECK(r.pass);
  }
}

TEST_CASE("tolerance overrides apply") {
  dill::LawConfig cfg;
  cfg.tolerance_overrides["compose_oracle"] = 0.5;
  CHECK(dill::run_law("compose_oracle", cfg).tolerance == 0.5);
  cfg.tolerance_overrides["compose_oracle"] = 0.0;
  cfg.compose_perturbation = 1e-3;
  CHECK_FALSE(dill::run_law("compose_oracle", cfg).pass);
}

TEST_CASE("invalid configurations are rejected") {
  dill::LawConfig cfg;
  cfg.max_dim = 0;
  CHECK_THROWS_AS(dill::validate_config(cfg), dill::Error);
  cfg = {};
  cfg.max_dim = dill::kLawMaxDim + 1;
  CHECK_THROWS_AS(dill::run_suite(cfg), dill::Error);
  cfg = {};
  cfg.max_degree = dill::kLawMaxDegree + 1;
  CHECK_THROWS_AS(dill::validate_config(cfg), dill::Error);
  cfg = {};
  cfg.samples = 0;
  CHECK_THROWS_AS(dill::validate_config(cfg), dill::Error);
  cfg = {};
  cfg.tolerance_overrides["no_such_law"] = 1.0;
  CHECK_THROWS_AS(dill::validate_config(cfg), dill::Error);
  CHECK_THROWS_AS(dill::run_law("no_such_law", dill::LawConfig{}), dill::Error);
}

TEST_CASE("summary table has a line per law and a total") {
  const std::string table = dill::summary_table(default_reports());
  std::size_t lines = 0;
  for (char c : table) lines += c == '\n' ? 1 : 0;
  CHECK(lines == default_reports().size() + 2);
  CHECK(table.find("56/56 laws passed") != std::string::npos);
}
