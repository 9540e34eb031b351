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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "doctest.h"
#include "higgs/errors.hpp"
#include "higgs/jobs.hpp"
#include "test_support.hpp"

using namespace higgs;
using higgs::cli::json;
using higgs::testing::Gen;

namespace {

SectionData cyclic(int r, int d, std::map<int, BinForm> comps) { return SectionData(make_standard_cyclic(r), d, std::move(comps)); }

// parse(serialize(x)) = x, also after a trip through the textual encoding.
template <class T, class Decode>
void round_trip(const T& x, Decode decode) {
  const json j = io::encode(x);
  CHECK(decode(j, "") == x);
  CHECK(decode(json::parse(j.dump()), "") == x);
}

bool same(const SingularPoint& a, const SingularPoint& b) {
  return a.chart == b.chart && a.locus == b.locus && a.point == b.point && a.eta_equation == b.eta_equation &&
         a.eta == b.eta && a.certificate == b.certificate;
}

bool same(const SubsheafRecord& a, const SubsheafRecord& b) {
  return a.kind == b.kind && a.summands == b.summands && a.lambda == b.lambda && a.kernel == b.kernel &&
         a.bundle == b.bundle && a.hilbert == b.hilbert;
}

struct Tool {
  int exit_code;
  bool output_exists;
  std::string output;
};

Tool run_tool(const std::string& args, const std::string& out_path) {
  std::filesystem::remove(out_path);
  const std::string cmd = std::string(HIGGSCOVER_PATH) + " " + args + " --output " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Tool t{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::filesystem::exists(out_path), ""};
  if (t.output_exists) {
    std::ifstream in(out_path);
    t.output.assign(std::istreambuf_iterator<char>(in), {});
  }
  return t;
}

std::string write_job(const std::string& name, const json& job) {
  const auto path = std::filesystem::temp_directory_path() / ("higgs_test_" + name + ".json");
  std::ofstream(path) << job.dump();
  return path.string();
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("higgs_test_" + name + ".out")).string();
}

}  // namespace

TEST_CASE("JSON round trips of domain types") {
  Gen gen(31);
  round_trip(Rat(-7, 3), io::decode_rat);
  round_trip(gen.poly_exact(4), io::decode_unipoly);
  round_trip(gen.form(3), io::decode_binform);
  round_trip(BinForm::zero(2), io::decode_binform);
  round_trip(ProjPoint(Rat(3, 2), 5), io::decode_projpoint);
  round_trip(ExtElem(UniPoly{-2, 0, 1}, UniPoly{Rat(1, 3), 4}), io::decode_ext);
  round_trip(SplitBundle{{-1, 0, 4}}, io::decode_bundle);
  round_trip(HilbertPoly{2, Rat(-1, 2)}, io::decode_hilbert);

  SUBCASE("covers and sections") {
    const auto std_sec = cyclic(3, 2, {{0, gen.nonzero_form(2)}, {2, gen.nonzero_form(1)}});
    round_trip(std_sec, io::decode_section);
    const auto triple = make_cyclic_triple(2, 1, BinForm::monomial(3, 1), BinForm::constant(2));
    CHECK(*io::decode_cover(io::encode(*triple), "") == *triple);
    round_trip(SectionData(triple, 3, {{1, gen.nonzero_form(1)}, {2, gen.nonzero_form(2)}}), io::decode_section);
  }
  SUBCASE("spectral data") {
    const auto sec = cyclic(3, 2, {{1, gen.nonzero_form(1)}, {2, gen.nonzero_form(1)}});
    const auto curve = spectral_curve(sec);
    round_trip(curve.annihilating, io::decode_spectral);
    const CharData c2 = io::decode_chardata(io::encode(curve.chars), "");
    CHECK(c2.r == curve.chars.r);
    CHECK(c2.elementary == curve.chars.elementary);
    CHECK(c2.coefficients == curve.chars.coefficients);
    const BinForm g = BinForm::monomial(2, 2) - Rat(2) * BinForm::monomial(2, 0);
    const auto pts = singular_locus(spectral_curve(cyclic(2, 3, {{1, g}})));
    REQUIRE_FALSE(pts.empty());
    for (const auto& p : pts) CHECK(same(io::decode_singular(json::parse(io::encode(p).dump()), ""), p));
  }
  SUBCASE("verdicts and factorizations") {
    const auto sec = cyclic(2, 2, {{1, gen.nonzero_form(1)}});
    const auto v = gieseker_verdict(SplitBundle{{0, 1}}, sec);
    const auto v2 = io::decode_verdict(json::parse(io::encode(v).dump()), "");
    CHECK(v2.status == v.status);
    CHECK(v2.method == v.method);
    CHECK(v2.total == v.total);
    CHECK(v2.reasons == v.reasons);
    REQUIRE(v2.witness);
    CHECK(same(*v2.witness, *v.witness));
    for (const auto& rec : invariant_subsheaf_search(SplitBundle{{0, 1}}, cyclic(2, 1, {{0, gen.nonzero_form(1)}})).records) {
      CHECK(same(io::decode_subsheaf(io::encode(rec), ""), rec));
    }
    const auto rep = intermediate_factorization(cyclic(4, 2, {{2, gen.nonzero_form(1)}}));
    const auto rep2 = io::decode_factorization(io::encode(rep), "");
    CHECK(rep2.subcover_index == rep.subcover_index);
    CHECK(rep2.quotient_degree == rep.quotient_degree);
    CHECK(rep2.tau == rep.tau);
    CHECK(rep2.verdict == rep.verdict);
  }
}

TEST_CASE("rationals are strict text") {
  CHECK(io::decode_rat(json("-3/6"), "") == Rat(-1, 2));
  CHECK(io::decode_rat(json(4), "") == 4);
  CHECK_THROWS_AS(io::decode_rat(json(0.5), "/x"), SchemaError);
  CHECK_THROWS_AS(io::decode_rat(json("1/0"), "/x"), SchemaError);
  CHECK_THROWS_AS(io::decode_rat(json("1.5"), "/x"), SchemaError);
  CHECK(io::encode(Rat(6, 4)) == json("3/2"));
}

TEST_CASE("job validation") {
  const json good = {{"command", "compute"}, {"r", 2}, {"d", 3}, {"section", {{"1", {"1", "0", "2"}}}}};
  const auto spec = cli::parse_job(good);
  CHECK(spec.section->component(1)->degree() == 2);
  CHECK(cli::parse_job(cli::job_echo(spec)) == spec);

  auto pointer_of = [](const json& job) {
    try {
      cli::parse_job(job);
    } catch (const SchemaError& e) {
      return e.pointer();
    }
    return std::string("<accepted>");
  };
  json bad = good;
  bad["section"]["1"] = {"1", "0"};
  CHECK(pointer_of(bad) == "/section/1");
  bad = good;
  bad["section"]["2"] = {"1"};
  CHECK(pointer_of(bad) == "/section/2");
  bad = good;
  bad["section"]["1"][1] = "x";
  CHECK(pointer_of(bad) == "/section/1/1");
  bad = good;
  bad.erase("d");
  CHECK(pointer_of(bad) == "/d");
  bad = good;
  bad["command"] = "plot";
  CHECK(pointer_of(bad) == "/command");
  bad = good;
  bad["colour"] = 1;
  CHECK(pointer_of(bad) == "/colour");
  bad = good;
  bad["sigma"] = {"1"};
  CHECK(pointer_of(bad) == "/section");
  const json stab = {{"command", "stability"}, {"cover", {{"r", 2}}}, {"d", 2}, {"section", {{"1", {"1", "1"}}}}};
  CHECK(pointer_of(stab) == "/M");

  SUBCASE("sigma in x, y") {
    // sigma = x y^5 + 2 x^5 y, the section of the good job.
    json j = {{"command", "compute"}, {"r", 2}, {"d", 3}, {"sigma", {"0", "1", "0", "0", "0", "2", "0"}}};
    CHECK(cli::parse_job(j).section == spec.section);
  }
}

TEST_CASE("reports") {
  const json job = {{"command", "compute"}, {"r", 2}, {"d", 3}, {"section", {{"1", {"1", "0", "2"}}}}};
  const auto res = cli::run_job(cli::parse_job(job));
  CHECK(res.exit_code == 0);
  CHECK(res.report["schema"] == "1");
  const auto& compute = res.report["results"]["compute"];
  // f = t^2 + 2 s^2: eta^2 - st f^2.
  CHECK(compute["text"] == "eta^2 + (-4*s^5*t - 4*s^3*t^3 - s*t^5)");
  CHECK(json::parse(res.report.dump()) == res.report);
  CHECK(cli::golden_view(res.report).dump() == cli::golden_view(cli::run_job(cli::parse_job(job)).report).dump());

  SUBCASE("every command runs") {
    const json sec = {{"1", {"1", "1"}}};
    for (const json& j : {json{{"command", "discriminant"}, {"r", 3}, {"d", 2}, {"section", {{"1", {"1", "1"}}, {"2", {"1", "-2"}}}}},
                          json{{"command", "singular"}, {"r", 2}, {"d", 2}, {"section", sec}},
                          json{{"command", "factor"}, {"r", 4}, {"d", 2}, {"section", {{"2", {"1", "1"}}}}},
                          json{{"command", "genus"}, {"r", 3}, {"d", 4}},
                          json{{"command", "pushforward"}, {"r", 3}, {"m", 4}},
                          json{{"command", "stability"}, {"r", 2}, {"d", 2}, {"section", sec}, {"M", {0, 1}}}}) {
      const auto r = cli::run_job(cli::parse_job(j));
      CHECK(r.exit_code == 0);
      CHECK(r.report["results"].size() == 1);
    }
    CHECK(cli::run_job(cli::parse_job({{"command", "genus"}, {"r", 3}, {"d", 4}})).report["results"]["genus"]
              ["arithmetic_genus"] == 10);
    const auto f = cli::run_job(cli::parse_job({{"command", "factor"}, {"r", 4}, {"d", 2}, {"section", {{"2", {"1", "1"}}}}}));
    CHECK(f.report["results"]["factor"]["verdict"] == "factors");
    const auto st = cli::run_job(cli::parse_job(
        {{"command", "stability"}, {"r", 2}, {"d", 2}, {"section", sec}, {"M", {0, 1}}}));
    CHECK(st.report["results"]["stability"]["verdict"]["status"] == "unstable");
    CHECK(st.report["results"]["stability"]["double_cover_verdict"]["status"] == "unstable");
  }
  SUBCASE("exit codes") {
    CHECK(cli::exit_code_for(SchemaError("/d", "x")) == 2);
    CHECK(cli::exit_code_for(Error(ErrorKind::NonReducedCurve, "x")) == 2);
    CHECK(cli::exit_code_for(Error(ErrorKind::InternalAssumption, "x")) == 3);
    CHECK(cli::exit_code_for(std::runtime_error("x")) == 3);
  }
}

TEST_CASE("command-line tool") {
  const json job = {{"command", "compute"}, {"r", 2}, {"d", 3}, {"section", {{"1", {"1", "0", "2"}}}}};
  const std::string in = write_job("good", job);
  const auto a = run_tool("compute --input " + in, tmp_path("a"));
  const auto b = run_tool("compute --input " + in, tmp_path("b"));
  CHECK(a.exit_code == 0);
  REQUIRE(a.output_exists);
  CHECK(cli::golden_view(json::parse(a.output)).dump() == cli::golden_view(json::parse(b.output)).dump());

  json bad = job;
  bad["section"]["1"] = {"1", "0"};
  const auto c = run_tool("compute --input " + write_job("bad", bad), tmp_path("c"));
  CHECK(c.exit_code == 2);
  CHECK_FALSE(c.output_exists);

  std::ofstream(tmp_path("broken") + ".json") << "{\"r\": 2,";
  CHECK(run_tool("compute --input " + tmp_path("broken") + ".json", tmp_path("d")).exit_code == 2);
  const json zero = {{"command", "singular"}, {"r", 2}, {"d", 1}, {"section", json::object()}};
  const auto z = run_tool("singular --input " + write_job("zero", zero), tmp_path("z"));
  CHECK(z.exit_code == 2);
  CHECK_FALSE(z.output_exists);
  CHECK(run_tool("compute --chart 7 --input " + in, tmp_path("e")).exit_code == 2);
}
