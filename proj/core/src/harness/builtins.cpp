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
#include "irr/harness/builtins.hpp"

#include <map>

#include "irr/error.hpp"

namespace irr::harness {

namespace {

// k[[t^2, t^3]] = k[x1, x2] / (x1^3 - x2^2).
Json cusp_ring() {
  return {{"schema", kScenarioSchema},
          {"variables", Json::array({"x1", "x2"})},
          {"relations_minors", Json::array({Json::array({"x1", "x2"}), Json::array({"x2", "x1^2"})})}};
}

Json vd2() {
  Json s = cusp_ring();
  s["name"] = "vd2";
  s["description"] =
      "Cusp k[[t^2,t^3]]: irreducible multiplicity of the maximal ideal "
      "against its reduction (x1).";
  s["ideals"] = {{"J", Json::array({"x1"})}};
  s["tasks"] = {
      {{"kind", "ir_table"}, {"ideal", "m"}, {"target", "ring"}, {"n_max", 5},
       {"expect", {{"values", Json::array({1, 2, 2, 2, 2, 2})}}}},
      {{"kind", "fit"}, {"ideal", "m"}, {"target", "ring"},
       {"expect", {{"t", 1}, {"coefficients", Json::array({2})}, {"stable_from", 1}}}},
      {{"kind", "reduction_check"}, {"j", "J"}, {"i", "m"},
       {"expect", {{"is_reduction", true}, {"reduction_number", 1}}}},
      {{"kind", "fit"}, {"ideal", "J"}, {"target", "ring"},
       {"expect", {{"t", 1}, {"coefficients", Json::array({1})}}}},
      {{"kind", "hs_table"}, {"ideal", "m"}, {"target", "ring"}, {"n_max", 4},
       {"expect", {{"values", Json::array({1, 3, 5, 7, 9})}}}},
      {{"kind", "theorem_check"}, {"ideal", "m"}, {"n", 1},
       {"expect", {{"/verdicts/0/ir_idealization", 2},
                   {"/verdicts/0/criterion_i/faithful", true},
                   {"/verdicts/0/criterion_ii/colon_test", false}}}}};
  s["notes"] = Json::array({"f0(m) = 2 while f0((x1)) = 1 although (x1) is a reduction of m."});
  return s;
}

Json gkl_ell3() {
  Json s = {{"schema", kScenarioSchema},
            {"name", "gkl-ell3"},
            {"description",
             "R = k[[x1,x2,x3]] / 2x2 minors of [[x1,x2,x3],[x2,x3,x1^2]] "
             "(the semigroup ring k[[t^3,t^4,t^5]]), M = (x1, x3), Q = (x1)."},
            {"variables", Json::array({"x1", "x2", "x3"})},
            {"relations_minors", Json::array({Json::array({"x1", "x2", "x3"}), Json::array({"x2", "x3", "x1^2"})})},
            {"module", {{"kind", "ideal"}, {"generators", Json::array({"x1", "x3"})}}},
            {"ideals", {{"Q", Json::array({"x1"})}}}};
  s["tasks"] = {
      {{"kind", "cm_check"}, {"ideal", "Q"}, {"target", "ring"},
       {"expect", {{"cohen_macaulay", true}, {"type", 2}}}},
      {{"kind", "cm_check"}, {"ideal", "Q"}, {"target", "module"},
       {"expect", {{"cohen_macaulay", true}, {"type", 2}}}},
      {{"kind", "corollary_check"}, {"ideal", "Q"},
       {"expect", {{"type_ring", 2},
                   {"type_module", 2},
                   {"/verdict/strict", true},
                   {"idealization_cm", true}}}},
      {{"kind", "eq_ctkq_check"}, {"ideal", "Q"}, {"target", "module"},
       {"expect", {{"holds", true}}}}};
  s["notes"] = Json::array({
      "The closed form (l - p) + 1 for the type of R x I_p evaluates to 1 at "
      "l = p = 3. It is not asserted: the strict chain r(M) < r(RxM) < r(R) + "
      "r(M) with r(R) = r(M) = 2 forces r(RxM) = 3, which the corollary_check "
      "task computes."});
  return s;
}

Json free_module_faithful() {
  Json s = {{"schema", kScenarioSchema},
            {"name", "free-module-faithful"},
            {"description",
             "Free module R^2 over k[[t^3,t^4,t^5]]: M / I^{n+1} M is faithful, "
             "so ir_M equals ir of the idealization for every n."},
            {"variables", Json::array({"x1", "x2", "x3"})},
            {"relations_minors", Json::array({Json::array({"x1", "x2", "x3"}), Json::array({"x2", "x3", "x1^2"})})},
            {"module", {{"kind", "free"}, {"rank", 2}}}};
  Json expect = Json::object();
  for (int n = 0; n <= 3; ++n) {
    expect["/verdicts/" + std::to_string(n) + "/criterion_i/equality"] = true;
    expect["/verdicts/" + std::to_string(n) + "/criterion_i/faithful"] = true;
  }
  s["tasks"] = {{{"kind", "theorem_check"}, {"ideal", "m"}, {"n_max", 3},
                 {"expect", expect}}};
  return s;
}

Json syzygy_omega1() {
  Json s = cusp_ring();
  s["name"] = "syzygy-omega1";
  s["description"] =
      "M = m, the first syzygy of the residue field over k[[t^2,t^3]], "
      "Q = (t^2): (Q : m) M = QM, so the idealization type is r(R) + r(M).";
  s["module"] = {{"kind", "ideal"}, {"generators", Json::array({"x1", "x2"})}};
  s["ideals"] = {{"Q", Json::array({"x1"})}};
  s["tasks"] = {
      {{"kind", "corollary_check"}, {"ideal", "Q"},
       {"expect", {{"type_ring", 1},
                   {"type_module", 2},
                   {"type_idealization", 3},
                   {"/verdict/criterion_ii/colon_test", true},
                   {"/verdict/criterion_ii/equality", true}}}},
      {{"kind", "eq_ctkq_check"}, {"ideal", "Q"}, {"target", "ring"},
       {"expect", {{"holds", true}, {"type", 1}}}}};
  return s;
}

Json lemma_fuzz_scenario() {
  return {{"schema", kScenarioSchema},
          {"name", "lemma-fuzz"},
          {"description",
           "Random homogeneous ideal pairs over F_2 and F_3: colons computed "
           "componentwise in R and M against the colon in the idealization."},
          {"tasks",
           {{{"kind", "lemma_fuzz"}, {"seed", 20261016}, {"cases", 100},
             {"expect", {{"failure_count", 0}}}}}}};
}

const std::map<std::string, Json (*)()>& registry() {
  static const std::map<std::string, Json (*)()> r = {
      {"vd2", vd2},
      {"gkl-ell3", gkl_ell3},
      {"free-module-faithful", free_module_faithful},
      {"syzygy-omega1", syzygy_omega1},
      {"lemma-fuzz", lemma_fuzz_scenario}};
  return r;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, make] : registry()) out.push_back(name);
  return out;
}

Json builtin_scenario(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end())
    throw PreconditionError("unknown builtin \"" + name + "\"");
  return it->second();
}

}  // namespace irr::harness
