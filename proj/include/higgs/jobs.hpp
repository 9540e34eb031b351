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

#pragma once

// Job files and reports for the command-line front end.
//
// A job is a JSON object
//   {"command": "compute", "cover": {"r": 2}, "d": 3,
//    "section": {"1": ["1", "0", "-2/3"]}}
// where "cover" may also be a full presentation {group, twist_degrees, forms},
// "r" may stand at top level as shorthand, and "sigma" (a form in x, y of
// degree r d) may replace "section" for standard cyclic covers. Stability
// jobs add "M" (bundle degrees) and optionally "ample_degree"; pushforward
// jobs take "r" and "m"; genus jobs take "r" and "d".

#include <cstdint>
#include <optional>
#include <string>

#include "higgs/json_io.hpp"

namespace higgs::cli {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 20260101;

enum class ChartChoice { Auto, T, S };

struct RunOptions {
  ChartChoice chart = ChartChoice::Auto;
  std::uint64_t seed = kDefaultSeed;
  std::string golden_path;  // repro only; empty skips the comparison
};

struct JobSpec {
  std::string command;
  CoverPtr cover;  // null for genus/pushforward/repro jobs given by r alone
  std::optional<int> r;
  std::optional<int> d;
  std::optional<int> m;
  std::optional<SectionData> section;
  std::optional<SplitBundle> bundle;
  int ample_degree = 1;
};

/// Validates a job object. `command` overrides the "command" field when set.
/// Throws SchemaError pointing at the offending field.
JobSpec parse_job(const json& j, const std::string& command = "");

/// Canonical re-encoding of a parsed job; parse_job(job_echo(s)) == s.
json job_echo(const JobSpec& spec);

bool operator==(const JobSpec& a, const JobSpec& b);

struct RunResult {
  json report;
  int exit_code = 0;
};

/// Dispatches the job. Library errors propagate; verdict-level failures
/// (repro mismatches) come back with exit code 1.
RunResult run_job(const JobSpec& spec, const RunOptions& options = {});

/// Report without the provenance block, the part that golden files pin down.
json golden_view(const json& report);

/// 2 for input errors (schema, parse, domain preconditions), 3 otherwise.
int exit_code_for(const std::exception& e);

struct ReproOutcome {
  json results;
  json warnings = json::array();
  bool passed = true;
};

/// Regenerates the fixed example corpus plus the seeded property suites.
ReproOutcome run_repro(std::uint64_t seed);

}  // namespace higgs::cli
