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

// higgscover: command-line front end for the spectral-curve library.

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "higgs/errors.hpp"
#include "higgs/jobs.hpp"

#ifndef HIGGS_GOLDEN_PATH
#define HIGGS_GOLDEN_PATH ""
#endif

namespace {

using higgs::cli::json;

struct Flags {
  std::string input;
  std::string output;
  bool pretty = false;
  std::string chart = "auto";
  std::uint64_t seed = higgs::cli::kDefaultSeed;
  std::string golden = HIGGS_GOLDEN_PATH;
  std::string format = "json";
};

json read_job(const std::string& path) {
  if (path.empty() || path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw higgs::SchemaError("", "cannot open job file " + path);
  return json::parse(in);
}

// Writes via a sibling temporary and rename so readers never see a partial file.
void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

// Prints the readable leaves; raw coefficient encodings are left to the JSON report.
void render_text(const json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    if (j.contains("coeffs")) return;
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j) scalars = scalars && !v.is_structured();
    if (scalars) {
      os << path << ": " << j.dump() << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

int run(const std::string& command, const Flags& flags) {
  higgs::cli::RunOptions opt;
  if (flags.chart == "0") {
    opt.chart = higgs::cli::ChartChoice::T;
  } else if (flags.chart == "1") {
    opt.chart = higgs::cli::ChartChoice::S;
  }
  opt.seed = flags.seed;
  if (command == "repro") opt.golden_path = flags.golden;

  const json job = command == "repro" && flags.input.empty() ? json{{"command", "repro"}} : read_job(flags.input);
  const auto spec = higgs::cli::parse_job(job, command);
  const auto res = higgs::cli::run_job(spec, opt);

  std::string text;
  if (flags.format == "text") {
    std::ostringstream os;
    render_text(res.report["results"], "", os);
    for (const auto& w : res.report["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
    text = os.str();
  } else {
    text = res.report.dump(flags.pretty ? 2 : -1) + "\n";
  }
  if (flags.output.empty()) {
    std::cout << text << std::flush;
  } else {
    write_atomically(flags.output, text);
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral curves and stability of Higgs bundles pushed forward along cyclic covers of P^1"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> subcommands = {
      {"compute", "characteristic and annihilating polynomials"},
      {"discriminant", "eta-discriminant of the spectral curve"},
      {"singular", "certified singular points"},
      {"factor", "subcover index, factorization and birationality"},
      {"genus", "arithmetic genus from r and d"},
      {"pushforward", "pi_* O(m) and the Hilbert polynomial relation"},
      {"stability", "Gieseker verdict for (pi_* M, Phi)"},
      {"repro", "regenerate the example corpus and compare against the golden report"}};
  for (const auto& [name, help] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", flags.input, "JSON job file ('-' for stdin)");
    sub->add_option("--output", flags.output, "report path (written atomically; stdout when absent)");
    sub->add_flag("--pretty", flags.pretty, "indent the JSON report");
    sub->add_option("--chart", flags.chart, "affine chart for presentations")->check(CLI::IsMember({"auto", "0", "1"}));
    sub->add_option("--seed", flags.seed, "seed for the randomized property suites");
    sub->add_option("--format", flags.format, "report format")->check(CLI::IsMember({"json", "text"}));
    if (name == "repro") sub->add_option("--golden", flags.golden, "golden report to compare against ('' skips)");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, flags);
  } catch (const higgs::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    const int code = higgs::cli::exit_code_for(e);
    std::cerr << (code == 3 ? "internal error: " : "error: ") << e.what() << "\n";
    return code;
  } catch (...) {
    std::cerr << "internal error: unknown exception\n";
    return 3;
  }
}
