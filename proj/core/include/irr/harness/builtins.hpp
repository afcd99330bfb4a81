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
#ifndef IRR_HARNESS_BUILTINS_HPP
#define IRR_HARNESS_BUILTINS_HPP

#include <string>
#include <vector>

#include "irr/harness/scenario.hpp"

namespace irr::harness {

std::vector<std::string> builtin_names();
/// Scenario document of a builtin; throws PreconditionError for unknown names.
Json builtin_scenario(const std::string& name);

}  // namespace irr::harness

#endif  // IRR_HARNESS_BUILTINS_HPP
