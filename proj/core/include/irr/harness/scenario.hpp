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
#ifndef IRR_HARNESS_SCENARIO_HPP
#define IRR_HARNESS_SCENARIO_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "irr/invariants.hpp"
#include "irr/local_ring.hpp"

namespace irr::harness {

using Json = nlohmann::json;

inline constexpr int kScenarioSchema = 1;
inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr std::uint32_t kDefaultFieldPrime = 32003;

/// Precedence: field_override, then the scenario's "field", then
/// default_field, then F_32003. n_max_override replaces the scenario default
/// but not an explicit per-task n_max.
struct RunOptions {
  std::optional<Field> field_override;
  std::optional<Field> default_field;
  std::optional<unsigned> n_max_override;
  unsigned truncation_extra = 0;
  unsigned threads = 1;
};

struct Scenario {
  Json source;
  std::string name;
  RingPtr ring;
  std::optional<PresentedModule> module;
  std::map<std::string, IdealHandle> ideals;
  TableParameters params;
  EngineOptions engine;
  std::vector<std::string> notes;
};

/// Validates the schema version, parses every polynomial and resolves every
/// referenced ideal name. Throws PreconditionError or ParseError.
Scenario load_scenario(const Json& doc, const RunOptions& opts = {});
Json read_json_file(const std::filesystem::path& path);

struct Report {
  Json document;
  bool ok = false;
};

/// Runs the tasks in declaration order. Task errors are recorded in the
/// report and never thrown.
Report run_scenario(const Scenario& scenario);

/// The report without its "timings" block; the deterministic part.
Json deterministic_part(const Json& report);
/// Two-space indent, keys sorted, trailing newline.
std::string dump_json(const Json& doc);
std::string render_markdown(const Json& report);

}  // namespace irr::harness

#endif  // IRR_HARNESS_SCENARIO_HPP
