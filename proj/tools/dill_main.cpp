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


// dill: command-line front end.
//
// Exit status: 0 success, 1 user error (bad input, bad arguments, shape
// mismatch), 2 internal invariant violation or a failing law.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dill/calculus.hpp"
#include "dill/dsl.hpp"
#include "dill/error.hpp"
#include "dill/io.hpp"
#include "dill/laws.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dill::Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw dill::Error("cannot write '" + out_path + "'");
  out << text << '\n';
  if (!out) throw dill::Error("write to '" + out_path + "' failed");
}

dill::TruncatedSeries load_series(const std::string& path) {
  try {
    return dill::series_from_json(read_file(path));
  } catch (const dill::Error& e) {
    throw dill::Error(path + ": " + e.what());
  }
}

int check_laws(const dill::LawConfig& cfg, const std::vector<std::string>& only, bool json) {
  dill::validate_config(cfg);
  std::vector<dill::LawReport> reports;
  if (only.empty()) {
    reports = dill::run_suite(cfg);
  } else {
    for (const auto& name : only) reports.push_back(dill::run_law(name, cfg));
  }
  if (json) {
    for (const auto& r : reports) std::cout << dill::report_to_json_line(r) << '\n';
  } else {
    std::cout << dill::summary_table(reports);
  }
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.pass) {
      ++failed;
      std::cerr << "law failed: " << r.name << " (max error " << r.max_error << ", tolerance " << r.tolerance << ")\n";
    }
  }
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dill: truncated power series and their exponential model"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dill 1.0.0");

  std::string file, f_path, g_path, out_path;
  std::size_t split = 0;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term file and print the result as JSON");
  eval_cmd->add_option("file", file, "Term file")->required();

  auto* fmt_cmd = app.add_subcommand("fmt", "Print a term file in canonical form");
  fmt_cmd->add_option("file", file, "Term file")->required();

  dill::LawConfig cfg;
  std::vector<std::string> only;
  bool json = false, serial = false;
  auto* laws_cmd = app.add_subcommand("check-laws", "Run the sampled law suite");
  laws_cmd->add_option("--dim", cfg.max_dim, "Largest dimension sampled")->capture_default_str();
  laws_cmd->add_option("--deg", cfg.max_degree, "Largest truncation degree")->capture_default_str();
  laws_cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  laws_cmd->add_option("--samples", cfg.samples, "Samples per law")->capture_default_str();
  laws_cmd->add_option("--law", only, "Run only the named law (repeatable)");
  laws_cmd->add_flag("--json", json, "One JSON report per line");
  laws_cmd->add_flag("--serial", serial, "Run laws on the calling thread");
  laws_cmd->add_option("--perturb-compose", cfg.compose_perturbation,
                       "Corrupt every composite by this amount (mutation testing; laws should fail)");

  auto* compose_cmd = app.add_subcommand("compose", "Compose two series: f o g");
  compose_cmd->add_option("f", f_path, "Outer series (JSON)")->required();
  compose_cmd->add_option("g", g_path, "Inner series (JSON)")->required();
  compose_cmd->add_option("-o,--output", out_path, "Output file (default: stdout)");

  auto* curry_cmd = app.add_subcommand("curry", "Curry a series along a split of its domain");
  curry_cmd->add_option("f", f_path, "Series (JSON)")->required();
  curry_cmd->add_option("--split", split, "Dimension of the outer variable")->required();
  curry_cmd->add_option("-o,--output", out_path, "Output file (default: stdout)");

  auto* diff_cmd = app.add_subcommand("diff", "Derivative series x -> df(x)");
  diff_cmd->add_option("f", f_path, "Series (JSON)")->required();
  diff_cmd->add_option("-o,--output", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*eval_cmd) {
      std::cout << dill::value_to_json(dill::evaluate_source(read_file(file))) << '\n';
    } else if (*fmt_cmd) {
      std::cout << dill::print_program(dill::parse_program(read_file(file)));
    } else if (*laws_cmd) {
      cfg.parallel = !serial;
      return check_laws(cfg, only, json);
    } else if (*compose_cmd) {
      emit(dill::series_to_json(dill::compose(load_series(f_path), load_series(g_path))), out_path);
    } else if (*curry_cmd) {
      emit(dill::nest_to_json(dill::curry(load_series(f_path), split)), out_path);
    } else if (*diff_cmd) {
      emit(dill::series_to_json(dill::derivative_series(load_series(f_path))), out_path);
    }
  } catch (const dill::Error& e) {
    std::cerr << "dill: " << e.what() << '\n';
    return 1;
  } catch (const dill::InvariantViolation& e) {
    std::cerr << "dill: internal invariant violated: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "dill: internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
