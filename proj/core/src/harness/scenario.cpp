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
#include "irr/harness/scenario.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "irr/error.hpp"
#include "irr/harness/fuzz.hpp"
#include "irr/harness/parser.hpp"
#include "irr/idealization.hpp"

namespace irr::harness {

namespace {

const std::set<std::string> kTaskKinds = {
    "ir_table",       "hs_table",        "fit",         "cm_check",
    "theorem_check",  "corollary_check", "lemma_check", "reduction_check",
    "eq_ctkq_check",  "theorem_fuzz",    "lemma_fuzz",  "socle_fuzz"};
const std::set<std::string> kTargets = {"module", "ring", "idealization"};
constexpr std::size_t kMaxReportedFailures = 20;

[[noreturn]] void invalid(const std::string& what) {
  throw PreconditionError("invalid scenario: " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    invalid(where + " needs \"" + key + "\"");
  return obj.at(key);
}

std::vector<std::string> string_list(const Json& arr, const std::string& where) {
  if (!arr.is_array()) invalid(where + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& s : arr) {
    if (!s.is_string()) invalid(where + " must be a list of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::vector<Polynomial> polynomials(const Json& arr, const PolyRingPtr& ring,
                                    const std::string& where) {
  std::vector<Polynomial> out;
  for (const auto& s : string_list(arr, where)) {
    try {
      out.push_back(parse_polynomial(s, ring));
    } catch (const ParseError& e) {
      throw ParseError(where + ": \"" + s + "\": ", e);
    }
  }
  return out;
}

std::vector<FreeVector> vectors(const Json& arr, const PolyRingPtr& ring,
                                std::size_t rank, const std::string& where) {
  if (!arr.is_array()) invalid(where + " must be a list of vectors");
  std::vector<FreeVector> out;
  for (const auto& v : arr) {
    auto comps = polynomials(v, ring, where);
    if (comps.size() != rank)
      invalid(where + " has a vector of length " +
              std::to_string(comps.size()) + ", rank is " +
              std::to_string(rank));
    out.emplace_back(std::move(comps));
  }
  return out;
}

Field resolve_field(const Json& doc, const RunOptions& opts) {
  if (opts.field_override) return *opts.field_override;
  if (doc.contains("field")) return Field::parse(doc.at("field").get<std::string>());
  if (opts.default_field) return *opts.default_field;
  return Field::prime(kDefaultFieldPrime);
}

PresentedModule parse_module(const Json& doc, const RingPtr& ring) {
  if (!doc.contains("module")) return PresentedModule::free(ring, 1);
  const Json& spec = doc.at("module");
  const std::string kind = require(spec, "kind", "module").get<std::string>();
  const auto& amb = ring->ambient();
  if (kind == "free")
    return PresentedModule::free(ring, spec.value("rank", std::size_t{1}));
  if (kind == "ideal")
    return PresentedModule::from_ideal(
        ring, polynomials(require(spec, "generators", "module"), amb,
                          "module generators"));
  if (kind == "presentation") {
    const std::size_t rank = require(spec, "rank", "module").get<std::size_t>();
    return PresentedModule::from_presentation(
        ring, rank,
        vectors(require(spec, "columns", "module"), amb, rank, "module columns"));
  }
  invalid("unknown module kind \"" + kind + "\"");
}

HomogeneousIdeal homogeneous_spec(const Json& spec, const IdealizationRing& a,
                                  const EngineOptions& opts,
                                  const std::string& where) {
  const auto& amb = a.base()->ambient();
  return homogeneous_ideal(
      a, polynomials(spec.value("ring", Json::array()), amb, where + ".ring"),
      vectors(spec.value("module", Json::array()), amb, a.rank(),
              where + ".module"),
      opts);
}

void validate_task(const Json& task, std::size_t index, const Scenario& sc) {
  const std::string where = "task " + std::to_string(index);
  if (!task.is_object()) invalid(where + " must be an object");
  const std::string kind = require(task, "kind", where).get<std::string>();
  if (!kTaskKinds.contains(kind)) invalid(where + ": unknown kind \"" + kind + "\"");
  for (const char* key : {"ideal", "i", "j"})
    if (task.contains(key) &&
        !sc.ideals.contains(task.at(key).get<std::string>()))
      invalid(where + ": unknown ideal \"" + task.at(key).get<std::string>() +
              "\"");
  if (task.contains("target") &&
      !kTargets.contains(task.at("target").get<std::string>()))
    invalid(where + ": unknown target");
  if (kind == "reduction_check" && (!task.contains("i") || !task.contains("j")))
    invalid(where + ": reduction_check needs \"i\" and \"j\"");
  if (kind == "lemma_check") {
    const auto& amb = sc.ring->ambient();
    for (const char* key : {"p", "q"}) {
      const Json& spec = require(task, key, where);
      polynomials(spec.value("ring", Json::array()), amb, where + "." + key);
      vectors(spec.value("module", Json::array()), amb, sc.module->rank(),
              where + "." + key);
    }
  }
  if (task.contains("expect") && !task.at("expect").is_object())
    invalid(where + ": expect must be an object");
}

struct Target {
  PresentedModule module;
  IdealHandle ideal;
};

Target target_of(const Scenario& sc, const Json& task) {
  const IdealHandle& ideal = sc.ideals.at(task.value("ideal", std::string("m")));
  const std::string target = task.value("target", std::string("module"));
  if (target == "ring") return {PresentedModule::free(sc.ring, 1), ideal};
  if (target == "idealization") {
    const IdealizationRing a = idealize(*sc.module);
    return {PresentedModule::free(a.ring(), 1), extend_ideal(a, ideal)};
  }
  return {*sc.module, ideal};
}

Json verdict_json(const TheoremVerdict& v) {
  return {{"n", v.n},
          {"ir_module", v.ir_module},
          {"ir_ring", v.ir_ring},
          {"ir_idealization", v.ir_idealization},
          {"lower_bound", v.lower_bound},
          {"upper_bound", v.upper_bound},
          {"strict", v.strict},
          {"criterion_i", {{"equality", v.faithful.equality},
                           {"faithful", v.faithful.test}}},
          {"criterion_ii", {{"equality", v.colon.equality},
                            {"colon_test", v.colon.test}}},
          {"socle_overlap", v.socle_overlap},
          {"length_ring", v.length_ring},
          {"length_module", v.length_module},
          {"length_idealization", v.length_idealization},
          {"violations", v.violations}};
}

Json fuzz_json(const FuzzSummary& s) {
  Json failures = Json::array();
  for (std::size_t i = 0; i < s.failures.size() && i < kMaxReportedFailures; ++i)
    failures.push_back(s.failures[i]);
  return {{"cases", s.cases},
          {"checks", s.checks},
          {"failure_count", s.failures.size()},
          {"failures", failures}};
}

// Fills \p result; returns whether the task's own verdict is positive.
bool execute(const Scenario& sc, const Json& task, Json& result) {
  const std::string kind = task.at("kind").get<std::string>();
  TableParameters params = sc.params;
  params.n_max = task.value("n_max", params.n_max);
  params.window = task.value("window", params.window);
  const EngineOptions& opts = sc.engine;

  if (kind == "ir_table" || kind == "hs_table") {
    const Target t = target_of(sc, task);
    result["values"] = kind == "ir_table"
                           ? ir_table(t.module, t.ideal, params.n_max, opts)
                           : hs_table(t.module, t.ideal, params.n_max, opts);
    return true;
  }
  if (kind == "fit") {
    const Target t = target_of(sc, task);
    const Table hs = hs_table(t.module, t.ideal, params.n_max, opts);
    const unsigned detected = detect_dimension(hs, params.window);
    if (task.contains("t") && task.at("t").get<unsigned>() != detected)
      throw PreconditionError("asserted t = " +
                              std::to_string(task.at("t").get<unsigned>()) +
                              " conflicts with detected t = " +
                              std::to_string(detected));
    const Table ir = ir_table(t.module, t.ideal, params.n_max, opts);
    const BinomialPolynomial fit = fit_binomial(ir, detected, params.window);
    result["t"] = detected;
    result["coefficients"] = fit.coefficients;
    result["stable_from"] = fit.stable_from;
    result["table"] = ir;
    result["hilbert_samuel"] = hs;
    return true;
  }
  if (kind == "cm_check") {
    const Target t = target_of(sc, task);
    const CmReport cm = cm_check(t.module, t.ideal, params, opts);
    result["cohen_macaulay"] = cm.cohen_macaulay;
    result["dimension"] = cm.dimension;
    result["colength"] = cm.colength;
    result["multiplicity"] = cm.multiplicity;
    result["hilbert_samuel"] = cm.hilbert_samuel;
    // Only a CM module has its socle dimension called the type.
    result[cm.cohen_macaulay ? "type" : "socle_dimension"] =
        ir_value(t.module, t.ideal, 0, opts);
    return true;
  }
  if (kind == "theorem_check") {
    const IdealHandle& ideal = sc.ideals.at(task.value("ideal", std::string("m")));
    std::vector<unsigned> ns;
    if (task.contains("n")) {
      ns.push_back(task.at("n").get<unsigned>());
    } else {
      for (unsigned n = 0; n <= params.n_max; ++n) ns.push_back(n);
    }
    Json verdicts = Json::array();
    bool consistent = true;
    for (unsigned n : ns) {
      const TheoremVerdict v = theorem_check(*sc.module, ideal, n, opts);
      consistent = consistent && v.consistent();
      verdicts.push_back(verdict_json(v));
    }
    result["verdicts"] = verdicts;
    result["consistent"] = consistent;
    return consistent;
  }
  if (kind == "corollary_check") {
    const IdealHandle& q = sc.ideals.at(task.value("ideal", std::string("m")));
    const CorollaryReport c = corollary_check(*sc.module, q, params, opts);
    result["type_ring"] = c.type_ring;
    result["type_module"] = c.type_module;
    result["type_idealization"] = c.type_idealization;
    result["idealization_cm"] = c.idealization_cm;
    result["verdict"] = verdict_json(c.verdict);
    result["violations"] = c.violations;
    result["consistent"] = c.consistent();
    return c.consistent();
  }
  if (kind == "lemma_check") {
    const IdealizationRing a = idealize(*sc.module);
    const HomogeneousIdeal p = homogeneous_spec(task.at("p"), a, opts, "p");
    const HomogeneousIdeal q = homogeneous_spec(task.at("q"), a, opts, "q");
    const ColonComparison cmp = compare_colons(a, p, q, opts);
    const LemmaColon lemma = colon_via_lemma(a, p, q, opts);
    bool homogeneous = true;
    try {
      homogeneous_ideal(a, lemma.colon.ring_part, lemma.colon.module_part, opts);
    } catch (const PreconditionError&) {
      homogeneous = false;
    }
    // Colengths do not depend on the truncation; dimensions would.
    const std::size_t ambient = cmp.direct.ambient_dimension();
    result["equal"] = cmp.equal;
    result["colength_lemma"] = ambient - cmp.via_lemma.dim();
    result["colength_direct"] = ambient - cmp.direct.dim();
    result["homogeneous_output"] = homogeneous;
    return cmp.equal && homogeneous;
  }
  if (kind == "reduction_check") {
    const ReductionResult r =
        is_reduction(sc.ideals.at(task.at("j").get<std::string>()),
                     sc.ideals.at(task.at("i").get<std::string>()), opts);
    result["is_reduction"] = r.is_reduction;
    result["reduction_number"] =
        r.reduction_number ? Json(*r.reduction_number) : Json(nullptr);
    return true;
  }
  if (kind == "eq_ctkq_check") {
    const Target t = target_of(sc, task);
    const CtkqReport r = eq_ctkq_check(t.module, t.ideal, params, opts);
    result["holds"] = r.holds;
    result["t"] = r.dimension;
    result["type"] = r.type;
    result["table"] = r.ir;
    result["predicted"] = r.predicted;
    return r.holds;
  }
  const std::uint64_t seed = task.value("seed", std::uint64_t{1});
  const std::size_t cases = task.value("cases", std::size_t{100});
  FuzzSummary s;
  if (kind == "theorem_fuzz") {
    s = theorem_fuzz(seed, cases, task.value("n_max", 3u), opts);
  } else if (kind == "lemma_fuzz") {
    s = lemma_fuzz(seed, cases, opts);
  } else {
    s = socle_fuzz(seed, cases, opts);
  }
  result = fuzz_json(s);
  return s.ok();
}

std::string cell(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

bool scalar_list(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

}  // namespace

Scenario load_scenario(const Json& doc, const RunOptions& opts) {
  if (!doc.is_object()) invalid("top level must be an object");
  if (doc.value("schema", 0) != kScenarioSchema)
    invalid("unsupported schema (expected " + std::to_string(kScenarioSchema) +
            ")");
  Scenario sc;
  sc.source = doc;
  sc.name = doc.value("name", std::string("scenario"));
  const Field field = resolve_field(doc, opts);
  const auto names = string_list(doc.value("variables", Json::array()),
                                 "variables");
  const auto amb = PolyRing::make(field, names);

  std::vector<Polynomial> relations;
  if (doc.contains("relations"))
    relations = polynomials(doc.at("relations"), amb, "relations");
  if (doc.contains("relations_minors")) {
    const Json& rows = doc.at("relations_minors");
    if (!rows.is_array()) invalid("relations_minors must be a 2-row matrix");
    std::vector<std::vector<std::string>> text;
    for (const auto& r : rows) text.push_back(string_list(r, "relations_minors"));
    const auto minors = minors_2x(text, amb);
    relations.insert(relations.end(), minors.begin(), minors.end());
  }
  sc.ring = PresentedRing::create(amb, std::move(relations));
  sc.module = parse_module(doc, sc.ring);

  sc.ideals.emplace("m", maximal_ideal(sc.ring));
  if (doc.contains("ideals")) {
    const Json& ideals = doc.at("ideals");
    if (!ideals.is_object()) invalid("ideals must map names to generators");
    for (const auto& [name, gens] : ideals.items())
      sc.ideals.insert_or_assign(
          name, IdealHandle(sc.ring, polynomials(gens, amb, "ideal " + name)));
  }

  const Json options = doc.value("options", Json::object());
  sc.params.n_max = options.value("n_max", sc.params.n_max);
  sc.params.window = options.value("window", sc.params.window);
  if (opts.n_max_override) sc.params.n_max = *opts.n_max_override;
  sc.engine.truncation_extra = opts.truncation_extra;
  sc.engine.threads = opts.threads;
  sc.notes = string_list(doc.value("notes", Json::array()), "notes");

  const Json tasks = doc.value("tasks", Json::array());
  if (!tasks.is_array()) invalid("tasks must be a list");
  for (std::size_t i = 0; i < tasks.size(); ++i) validate_task(tasks[i], i, sc);
  return sc;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte);
  }
}

Report run_scenario(const Scenario& sc) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  Json tasks = Json::array();
  Json task_seconds = Json::array();
  bool all_ok = true;
  const Json task_list = sc.source.value("tasks", Json::array());
  for (std::size_t i = 0; i < task_list.size(); ++i) {
    const Json& task = task_list[i];
    const auto t0 = Clock::now();
    Json entry = {{"index", i}, {"kind", task.at("kind")}, {"task", task}};
    Json result = Json::object();
    Json checks = Json::array();
    std::string status;
    try {
      bool ok = execute(sc, task, result);
      const Json expect = task.value("expect", Json::object());
      for (const auto& [key, expected] : expect.items()) {
        const Json::json_pointer ptr(key.starts_with('/') ? key : "/" + key);
        const Json actual = result.contains(ptr) ? result.at(ptr) : Json(nullptr);
        const bool passed = actual == expected;
        ok = ok && passed;
        checks.push_back({{"key", key},
                          {"expected", expected},
                          {"actual", actual},
                          {"passed", passed}});
      }
      status = ok ? "ok" : "failed";
    } catch (const std::exception& e) {
      status = "error";
      entry["error"] = e.what();
    }
    all_ok = all_ok && status == "ok";
    entry["status"] = status;
    entry["result"] = result;
    entry["checks"] = checks;
    tasks.push_back(std::move(entry));
    task_seconds.push_back(
        std::chrono::duration<double>(Clock::now() - t0).count());
  }
  Report report;
  report.ok = all_ok;
  report.document = {
      {"engine", {{"name", "irr"}, {"version", kEngineVersion}}},
      {"schema", kScenarioSchema},
      {"name", sc.name},
      {"description", sc.source.value("description", std::string())},
      {"field", sc.ring->field().to_string()},
      {"scenario", sc.source},
      {"notes", sc.notes},
      {"tasks", tasks},
      {"ok", all_ok},
      {"timings",
       {{"total_seconds",
         std::chrono::duration<double>(Clock::now() - start).count()},
        {"tasks", task_seconds},
        {"threads", sc.engine.threads},
        {"truncation_extra", sc.engine.truncation_extra}}}};
  return report;
}

Json deterministic_part(const Json& report) {
  Json out = report;
  out.erase("timings");
  return out;
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string render_markdown(const Json& report) {
  std::ostringstream out;
  out << "# irr report: " << cell(report.value("name", Json("scenario")))
      << "\n\n";
  if (const auto d = report.value("description", std::string()); !d.empty())
    out << d << "\n\n";
  out << "- field: " << cell(report.value("field", Json(""))) << "\n"
      << "- status: " << (report.value("ok", false) ? "ok" : "FAILED") << "\n";
  for (const auto& note : report.value("notes", Json::array()))
    out << "- note: " << cell(note) << "\n";
  for (const auto& task : report.value("tasks", Json::array())) {
    out << "\n## " << task.at("index").get<std::size_t>() << ". "
        << cell(task.at("kind")) << " (" << cell(task.at("status")) << ")\n\n";
    if (task.contains("error")) out << "error: " << cell(task.at("error")) << "\n\n";
    std::string tables;
    for (const auto& [key, value] : task.at("result").items()) {
      if (!scalar_list(value)) {
        out << "- " << key << ": " << cell(value) << "\n";
        continue;
      }
      std::ostringstream t;
      t << "\n| " << key << " |";
      for (std::size_t i = 0; i < value.size(); ++i) t << " " << i << " |";
      t << "\n|---|";
      for (std::size_t i = 0; i < value.size(); ++i) t << "---|";
      t << "\n| |";
      for (const auto& v : value) t << " " << cell(v) << " |";
      t << "\n";
      tables += t.str();
    }
    for (const auto& c : task.at("checks"))
      out << "- expect " << cell(c.at("key")) << " = "
          << c.at("expected").dump() << ": "
          << (c.at("passed").get<bool>() ? "pass" : "FAIL (got " +
                                                        c.at("actual").dump() + ")")
          << "\n";
    out << tables;
  }
  if (report.contains("timings"))
    out << "\n_total " << report.at("timings").value("total_seconds", 0.0)
        << " s_\n";
  return out.str();
}

}  // namespace irr::harness
