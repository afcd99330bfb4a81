// Copyright 2026 The irr Authors
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
// irr: runs scenario files, builtin scenarios and fuzz suites, and writes
// JSON and markdown reports.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "irr/error.hpp"
#include "irr/harness/builtins.hpp"
#include "irr/harness/scenario.hpp"

namespace {

using irr::harness::Json;

constexpr int kExitTaskFailure = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string field;
  std::optional<unsigned> n_max;
  std::string out;
  std::string format = "md";
  unsigned truncation_extra = 0;
  std::optional<unsigned> threads;
};

void add_common(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--field", flags.field,
                  "Coefficient field, q or Fp:<p>; overrides the scenario and IRR_FIELD");
  cmd->add_option("--nmax", flags.n_max, "Default largest n for tables");
  cmd->add_option("--out", flags.out, "Directory for <name>.json and <name>.md");
  cmd->add_option("--format", flags.format, "Report format on stdout and in --out")
      ->check(CLI::IsMember({"json", "md", "both"}));
  cmd->add_option("--truncation-extra", flags.truncation_extra,
                  "Raise every truncation exponent by this amount");
  cmd->add_option("--threads", flags.threads,
                  "Worker threads; overrides IRR_THREADS");
}

irr::harness::RunOptions run_options(const Flags& flags) {
  irr::harness::RunOptions opts;
  if (!flags.field.empty()) opts.field_override = irr::Field::parse(flags.field);
  if (const char* env = std::getenv("IRR_FIELD"); env && *env)
    opts.default_field = irr::Field::parse(env);
  opts.n_max_override = flags.n_max;
  opts.truncation_extra = flags.truncation_extra;
  if (flags.threads) {
    opts.threads = *flags.threads;
  } else if (const char* env = std::getenv("IRR_THREADS"); env && *env) {
    opts.threads = static_cast<unsigned>(std::stoul(env));
  }
  return opts;
}

int emit(const irr::harness::Report& report, const Flags& flags) {
  const std::string json = irr::harness::dump_json(report.document);
  const std::string md = irr::harness::render_markdown(report.document);
  if (flags.format == "json") {
    std::cout << json;
  } else {
    std::cout << md;
  }
  if (!flags.out.empty()) {
    const std::filesystem::path dir(flags.out);
    std::filesystem::create_directories(dir);
    const std::string name = report.document.value("name", std::string("report"));
    if (flags.format != "md") std::ofstream(dir / (name + ".json")) << json;
    if (flags.format != "json") std::ofstream(dir / (name + ".md")) << md;
  }
  return report.ok ? 0 : kExitTaskFailure;
}

int run_document(const Json& doc, const Flags& flags) {
  const auto scenario = irr::harness::load_scenario(doc, run_options(flags));
  return emit(irr::harness::run_scenario(scenario), flags);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index of reducibility and idealization engine"};
  app.require_subcommand(1);
  Flags flags;

  std::string file;
  auto* run = app.add_subcommand("run", "Run a scenario JSON file");
  run->add_option("file", file, "Scenario file")->required();
  add_common(run, flags);

  std::string name;
  auto* builtin = app.add_subcommand("builtin", "Run a builtin scenario");
  builtin->add_option("name", name, "Builtin name (see list-builtins)")->required();
  add_common(builtin, flags);

  auto* list = app.add_subcommand("list-builtins", "List builtin scenarios");

  std::uint64_t seed = 1;
  std::size_t cases = 200;
  std::string kind = "all";
  auto* fuzz = app.add_subcommand("fuzz", "Run the seeded fuzz suites");
  fuzz->add_option("--seed", seed, "Seed");
  fuzz->add_option("--cases", cases, "Cases per suite");
  fuzz->add_option("--kind", kind, "Suite to run")
      ->check(CLI::IsMember({"theorem", "lemma", "socle", "all"}));
  add_common(fuzz, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& n : irr::harness::builtin_names()) {
        const Json doc = irr::harness::builtin_scenario(n);
        std::cout << n << "\t" << doc.value("description", std::string()) << "\n";
      }
      return 0;
    }
    if (run->parsed()) return run_document(irr::harness::read_json_file(file), flags);
    if (builtin->parsed())
      return run_document(irr::harness::builtin_scenario(name), flags);

    Json tasks = Json::array();
    for (const std::string k : {"theorem", "lemma", "socle"})
      if (kind == "all" || kind == k)
        tasks.push_back({{"kind", k + "_fuzz"}, {"seed", seed}, {"cases", cases},
                         {"expect", {{"failure_count", 0}}}});
    const Json doc = {{"schema", irr::harness::kScenarioSchema},
                      {"name", "fuzz"},
                      {"description", "Seeded fuzz suites, seed " +
                                          std::to_string(seed)},
                      {"tasks", tasks}};
    return run_document(doc, flags);
  } catch (const std::exception& e) {
    std::cerr << "irr: " << e.what() << "\n";
    return kExitUsage;
  }
}
