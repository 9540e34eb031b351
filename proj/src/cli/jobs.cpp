/*
   Copyright 2026 The higgscover Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "higgs/jobs.hpp"

#include <gmp.h>

#include <chrono>
#include <fstream>
#include <set>

#include "higgs/errors.hpp"

namespace higgs::cli {

namespace {

const std::set<std::string>& commands() {
  static const std::set<std::string> names = {"compute", "discriminant", "singular", "factor",
                                              "genus",   "pushforward",  "stability", "repro"};
  return names;
}

bool needs_section(const std::string& c) {
  return c == "compute" || c == "discriminant" || c == "singular" || c == "factor" || c == "stability";
}

std::optional<int> optional_int(const json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return io::decode_int(j[key], std::string("/") + key);
}

// sigma(x, y) of degree r d, split into character components.
SectionData section_from_sigma(const CoverPtr& cover, int d, const json& j) {
  const auto r = cover->standard_cyclic_order();
  if (!r) throw SchemaError("/sigma", "sigma needs a standard cyclic cover; give \"section\" instead");
  const BinForm sigma = io::decode_binform(j, "/sigma");
  if (sigma.degree() != *r * d) {
    throw SchemaError("/sigma", "sigma must have degree r d = " + std::to_string(*r * d));
  }
  return decompose_section(*r, d, sigma);
}

// Section components given as {"k": coeffs} next to the cover and d.
SectionData section_from_components(const CoverPtr& cover, int d, const json& j) {
  json full = {{"cover", io::encode(*cover)}, {"d", d}, {"components", j}};
  try {
    return io::decode_section(full, "");
  } catch (const SchemaError& e) {
    // Re-anchor pointers from the synthetic object onto the job.
    std::string p = e.pointer();
    const std::string prefix = "/components";
    if (p.rfind(prefix, 0) == 0) p = "/section" + p.substr(prefix.size());
    std::string what = e.what();
    const auto colon = what.find(": ", what.find(": ") + 2);
    throw SchemaError(p, colon == std::string::npos ? what : what.substr(colon + 2));
  }
}

std::string chart_name(ChartChoice c) {
  switch (c) {
    case ChartChoice::Auto: return "auto";
    case ChartChoice::T: return "0";
    case ChartChoice::S: return "1";
  }
  return "auto";
}

json affine_presentations(const SpectralPoly& f, ChartChoice choice) {
  json out = json::object();
  if (choice != ChartChoice::S) out["t"] = to_string(f.dehomogenize(Chart::T), "w", "eta");
  if (choice != ChartChoice::T) out["s"] = to_string(f.dehomogenize(Chart::S), "v", "eta");
  return out;
}

json affine_presentations(const BinForm& f, ChartChoice choice) {
  json out = json::object();
  if (choice != ChartChoice::S) out["t"] = to_string(f.dehomogenize(Chart::T), "w");
  if (choice != ChartChoice::T) out["s"] = to_string(f.dehomogenize(Chart::S), "v");
  return out;
}

json section_summary(const SectionData& sec) {
  json out = io::encode(sec);
  if (sec.cover().standard_cyclic_order()) out["sigma"] = to_string(expand_section(sec), true);
  return out;
}

json run_compute(const JobSpec& spec, const RunOptions& opt, json& warnings) {
  const SectionData& sec = *spec.section;
  const SpectralCurve curve = spectral_curve(sec);
  const SpectralPoly f = curve.chars.poly();
  json out = {{"section", section_summary(sec)},
              {"char", io::encode(curve.chars)},
              {"spectral_poly", io::encode(f)},
              {"text", to_string(f)},
              {"affine", affine_presentations(f, opt.chart)},
              {"annihilating", io::encode(curve.annihilating)},
              {"annihilating_text", to_string(curve.annihilating)},
              {"subcover_index", curve.subcover_index},
              {"integral", curve.integral == Integrality::Certified ? "certified" : "not-certified"}};
  if (curve.integral != Integrality::Certified) warnings.push_back("integrality not certified");
  return out;
}

json run_discriminant(const JobSpec& spec, const RunOptions& opt, json& warnings) {
  const SpectralCurve curve = spectral_curve(*spec.section);
  const BinForm disc = discriminant_eta(curve);
  if (curve.subcover_index > 1) warnings.push_back("discriminant of the annihilating polynomial (curve factors)");
  return {{"discriminant", io::encode(disc)},
          {"text", to_string(disc)},
          {"affine", affine_presentations(disc, opt.chart)},
          {"of", to_string(curve.annihilating)}};
}

json run_singular(const JobSpec& spec, json& warnings) {
  const SectionData& sec = *spec.section;
  const SpectralCurve curve = spectral_curve(sec);
  const auto pts = singular_locus(curve);
  json list = json::array();
  int count = 0;
  for (const auto& p : pts) {
    list.push_back(io::encode(p));
    count += p.geometric_count();
  }
  json out = {{"points", list}, {"geometric_count", count}, {"curve", to_string(curve.annihilating)}};
  if (sec.cover().standard_cyclic_order() == 2 && sec.component(1)) {
    const BinForm h0 = sec.component(0) ? *sec.component(0) : BinForm::zero(sec.twist_degree());
    const BinForm st = BinForm::monomial(2, 1);
    out["double_cover_predictor_agrees"] = same_points(pts, double_cover_singularities(h0, *sec.component(1), st));
  }
  if (curve.integral != Integrality::Certified) warnings.push_back("integrality not certified");
  return out;
}

json run_factor(const JobSpec& spec) {
  const auto v = birationality_verdict(*spec.section);
  json out = {{"verdict", to_string(v.verdict)}, {"justification", v.justification}, {"fiber_witness", v.fiber_witness}};
  if (v.factorization) {
    out["factorization"] = io::encode(*v.factorization);
    out["factorization"]["tau"] = section_summary(v.factorization->tau);
  } else {
    out["factorization"] = nullptr;
  }
  return out;
}

json run_stability(const JobSpec& spec) {
  const SectionData& sec = *spec.section;
  const SplitBundle& m = *spec.bundle;
  const auto search = invariant_subsheaf_search(m, sec, spec.ample_degree);
  json records = json::array();
  for (const auto& rec : search.records) records.push_back(io::encode(rec));
  json out = {{"M", io::encode(m)},
              {"pushforward", io::encode(search.total)},
              {"hilbert", io::encode(search.total_hilbert)},
              {"subsheaves", records},
              {"search_complete", search.complete},
              {"verdict", io::encode(gieseker_verdict(m, sec, spec.ample_degree))}};
  if (sec.cover().standard_cyclic_order() == 2 && !is_pullback(sec)) {
    out["double_cover_verdict"] = io::encode(double_cover_verdict(m, sec, spec.ample_degree));
  }
  return out;
}

json run_pushforward(const JobSpec& spec) {
  const int r = *spec.r, m = *spec.m;
  const auto rel = pushforward_relation_check(r, m);
  return {{"bundle", io::encode(pushforward_line_bundle(r, m))},
          {"relation", {{"holds", rel.holds}, {"lhs", io::encode(rel.lhs)}, {"rhs", io::encode(rel.rhs)}}}};
}

// Golden view restricted to the seed-independent part of a repro report.
json fixed_corpus(const json& report) {
  json corpus = json::array();
  for (const auto& e : report.at("results").at("repro").at("corpus")) {
    if (e.at("name") != "properties") corpus.push_back(e);
  }
  return corpus;
}

json run_repro_job(const RunOptions& opt, json& warnings, bool& passed) {
  ReproOutcome out = run_repro(opt.seed);
  for (const auto& w : out.warnings) warnings.push_back(w);
  passed = out.passed;
  return out.results;
}

}  // namespace

JobSpec parse_job(const json& j, const std::string& command) {
  if (!j.is_object()) throw SchemaError("", "a job is a JSON object");
  JobSpec spec;
  if (!command.empty()) {
    spec.command = command;
  } else {
    const json& c = io::member(j, "command", "");
    if (!c.is_string()) throw SchemaError("/command", "expected a string");
    spec.command = c.get<std::string>();
  }
  if (!commands().count(spec.command)) throw SchemaError("/command", "unknown command \"" + spec.command + "\"");
  static const std::set<std::string> known = {"command", "cover", "r", "d", "m", "section", "sigma", "M", "ample_degree",
                                              "options"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw SchemaError("/" + key, "unknown field");
  }

  spec.r = optional_int(j, "r");
  spec.d = optional_int(j, "d");
  spec.m = optional_int(j, "m");
  if (j.contains("cover")) {
    spec.cover = io::decode_cover(j["cover"], "/cover");
    if (spec.r && spec.cover->order() != *spec.r) throw SchemaError("/r", "r disagrees with the cover");
  } else if (spec.r && needs_section(spec.command)) {
    if (*spec.r < 1 || *spec.r > 64) throw SchemaError("/r", "cover degree must lie in [1, 64]");
    spec.cover = make_standard_cyclic(*spec.r);
  }
  if (spec.cover) spec.r = spec.cover->order();

  if (needs_section(spec.command)) {
    if (!spec.cover) throw SchemaError("/cover", "missing field");
    if (!spec.d) throw SchemaError("/d", "missing field");
    if (*spec.d < 0) throw SchemaError("/d", "twist degree must be non-negative");
    if (j.contains("section") == j.contains("sigma")) throw SchemaError("/section", "give exactly one of section, sigma");
    if (j.contains("section")) {
      if (!j["section"].is_object()) throw SchemaError("/section", "expected an object keyed by character index");
      spec.section = section_from_components(spec.cover, *spec.d, j["section"]);
    } else {
      spec.section = section_from_sigma(spec.cover, *spec.d, j["sigma"]);
    }
  }
  if (spec.command == "stability") {
    spec.bundle = io::decode_bundle(io::member(j, "M", ""), "/M");
    if (j.contains("ample_degree")) {
      spec.ample_degree = io::decode_int(j["ample_degree"], "/ample_degree");
      if (spec.ample_degree < 1) throw SchemaError("/ample_degree", "ample degree must be positive");
    }
  }
  if (spec.command == "genus" || spec.command == "pushforward") {
    if (!spec.r) throw SchemaError("/r", "missing field");
    if (*spec.r < 1) throw SchemaError("/r", "cover degree must be positive");
  }
  if (spec.command == "genus") {
    if (!spec.d) throw SchemaError("/d", "missing field");
    if (*spec.d < 0) throw SchemaError("/d", "twist degree must be non-negative");
  }
  if (spec.command == "pushforward" && !spec.m) throw SchemaError("/m", "missing field");
  return spec;
}

json job_echo(const JobSpec& spec) {
  json j = {{"command", spec.command}};
  if (spec.cover) j["cover"] = io::encode(*spec.cover);
  if (spec.r && !spec.cover) j["r"] = *spec.r;
  if (spec.d) j["d"] = *spec.d;
  if (spec.m) j["m"] = *spec.m;
  if (spec.section) j["section"] = io::encode(*spec.section)["components"];
  if (spec.bundle) {
    j["M"] = io::encode(*spec.bundle);
    j["ample_degree"] = spec.ample_degree;
  }
  return j;
}

bool operator==(const JobSpec& a, const JobSpec& b) {
  const bool covers_equal = (!a.cover && !b.cover) || (a.cover && b.cover && *a.cover == *b.cover);
  return a.command == b.command && covers_equal && a.r == b.r && a.d == b.d && a.m == b.m && a.section == b.section &&
         a.bundle == b.bundle && a.ample_degree == b.ample_degree;
}

RunResult run_job(const JobSpec& spec, const RunOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  RunResult res;
  json warnings = json::array();
  json results = json::object();
  const std::string& c = spec.command;
  if (c == "compute") {
    results["compute"] = run_compute(spec, opt, warnings);
  } else if (c == "discriminant") {
    results["discriminant"] = run_discriminant(spec, opt, warnings);
  } else if (c == "singular") {
    results["singular"] = run_singular(spec, warnings);
  } else if (c == "factor") {
    results["factor"] = run_factor(spec);
  } else if (c == "genus") {
    results["genus"] = {{"r", *spec.r}, {"d", *spec.d}, {"arithmetic_genus", arithmetic_genus(*spec.r, *spec.d)}};
  } else if (c == "pushforward") {
    results["pushforward"] = run_pushforward(spec);
  } else if (c == "stability") {
    results["stability"] = run_stability(spec);
  } else if (c == "repro") {
    bool passed = true;
    results["repro"] = run_repro_job(opt, warnings, passed);
    if (!passed) res.exit_code = 1;
    if (!opt.golden_path.empty()) {
      json candidate = {{"schema", kSchemaVersion}, {"job", job_echo(spec)}, {"options", {{"seed", opt.seed}}},
                        {"results", results}, {"warnings", warnings}};
      std::ifstream in(opt.golden_path);
      bool match = false;
      if (!in) {
        warnings.push_back("golden file not found: " + opt.golden_path);
      } else {
        try {
          json golden = golden_view(json::parse(in));
          if (opt.seed != kDefaultSeed) {
            golden = fixed_corpus(golden);
            candidate = fixed_corpus(candidate);
          }
          match = golden.dump() == candidate.dump();
        } catch (const json::exception&) {
          warnings.push_back("golden file is not valid JSON");
        }
        if (!match) warnings.push_back("report differs from the golden file");
      }
      if (opt.seed != kDefaultSeed) warnings.push_back("golden comparison covers the fixed corpus only (non-default seed)");
      results["golden_match"] = match;
      if (!match) res.exit_code = 1;
    }
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  json options = {{"chart", chart_name(opt.chart)}};
  if (c == "repro") options = {{"seed", opt.seed}};
  res.report = {{"schema", kSchemaVersion},
                {"job", job_echo(spec)},
                {"options", options},
                {"results", results},
                {"warnings", warnings},
                {"provenance", {{"tool", "higgscover"}, {"version", kToolVersion}, {"gmp", gmp_version},
                                {"elapsed_ms", ms.count()}}}};
  return res;
}

json golden_view(const json& report) {
  json out = report;
  out.erase("provenance");
  if (out.contains("results") && out["results"].is_object()) out["results"].erase("golden_match");
  if (out.contains("warnings") && out["warnings"].is_array()) {
    json kept = json::array();
    for (const auto& w : out["warnings"]) {
      const std::string s = w.is_string() ? w.get<std::string>() : "";
      if (s.rfind("golden file", 0) != 0 && s != "report differs from the golden file") kept.push_back(w);
    }
    out["warnings"] = kept;
  }
  return out;
}

int exit_code_for(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) return is_internal(err->kind()) ? 3 : 2;
  if (dynamic_cast<const json::exception*>(&e)) return 2;
  return 3;
}

}  // namespace higgs::cli
