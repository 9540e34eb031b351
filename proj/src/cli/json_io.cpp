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

#include "higgs/json_io.hpp"

#include <limits>

#include "higgs/errors.hpp"

namespace higgs::io {

namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& expect_array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  return j;
}

const json& expect_object(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  return j;
}

std::string decode_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw SchemaError(ptr, "expected a string");
  return j.get<std::string>();
}

std::vector<Rat> decode_rats(const json& j, const std::string& ptr) {
  expect_array(j, ptr);
  std::vector<Rat> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(decode_rat(j[i], child(ptr, i)));
  return out;
}

std::vector<int> decode_ints(const json& j, const std::string& ptr) {
  expect_array(j, ptr);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(decode_int(j[i], child(ptr, i)));
  return out;
}

Chart decode_chart(const json& j, const std::string& ptr) {
  const std::string c = decode_string(j, ptr);
  if (c == "t") return Chart::T;
  if (c == "s") return Chart::S;
  throw SchemaError(ptr, "chart must be \"t\" or \"s\"");
}

template <class E, std::size_t N>
E decode_enum(const json& j, const std::string& ptr, const E (&values)[N]) {
  const std::string s = decode_string(j, ptr);
  for (E v : values) {
    if (to_string(v) == s) return v;
  }
  throw SchemaError(ptr, "unknown value \"" + s + "\"");
}

// Rebuilds a form, turning shape errors into schema errors at `ptr`.
template <class F>
auto rethrow_at(const std::string& ptr, F&& f) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegreeMismatch || e.kind() == ErrorKind::Shape || e.kind() == ErrorKind::InvalidPoint ||
        e.kind() == ErrorKind::ZeroInput) {
      throw SchemaError(ptr, e.what());
    }
    throw;
  }
}

}  // namespace

const json& member(const json& j, const std::string& key, const std::string& ptr) {
  expect_object(j, ptr);
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(ptr, key), "missing field");
  return *it;
}

// --- scalars and polynomials -------------------------------------------------

json encode(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return format_rat(c);
}

int decode_int(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw SchemaError(ptr, "expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw SchemaError(ptr, "integer out of range");
  }
  return static_cast<int>(v);
}

Rat decode_rat(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw SchemaError(ptr, "expected a rational as \"p/q\" text");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(ptr, e.what());
  }
}

json encode(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(encode(c));
  return out;
}

UniPoly decode_unipoly(const json& j, const std::string& ptr) { return UniPoly(decode_rats(j, ptr)); }

json encode(const BinForm& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(encode(c));
  return {{"degree", f.degree()}, {"coeffs", coeffs}};
}

BinForm decode_binform(const json& j, const std::string& ptr) {
  if (j.is_array()) {
    if (j.empty()) throw SchemaError(ptr, "a form needs at least one coefficient");
    auto coeffs = decode_rats(j, ptr);
    const int degree = static_cast<int>(coeffs.size()) - 1;
    return BinForm(degree, std::move(coeffs));
  }
  const int degree = decode_int(member(j, "degree", ptr), child(ptr, "degree"));
  auto coeffs = decode_rats(member(j, "coeffs", ptr), child(ptr, "coeffs"));
  return rethrow_at(ptr, [&] { return BinForm(degree, std::move(coeffs)); });
}

json encode(const ProjPoint& p) { return json::array({format_rat(Rat(p.s())), format_rat(Rat(p.t()))}); }

ProjPoint decode_projpoint(const json& j, const std::string& ptr) {
  expect_array(j, ptr);
  if (j.size() != 2) throw SchemaError(ptr, "a point is [s, t]");
  const Rat s = decode_rat(j[0], child(ptr, 0)), t = decode_rat(j[1], child(ptr, 1));
  return rethrow_at(ptr, [&] { return ProjPoint(s, t); });
}

json encode(const ExtElem& e) { return {{"modulus", encode(e.modulus())}, {"value", encode(e.value())}}; }

ExtElem decode_ext(const json& j, const std::string& ptr) {
  const UniPoly m = decode_unipoly(member(j, "modulus", ptr), child(ptr, "modulus"));
  const UniPoly v = decode_unipoly(member(j, "value", ptr), child(ptr, "value"));
  if (m.degree() < 1 || m.leading() != 1) throw SchemaError(child(ptr, "modulus"), "modulus must be monic of degree >= 1");
  const ExtElem e(m, v);
  if (!(e.value() == v)) throw SchemaError(child(ptr, "value"), "value is not reduced");
  return e;
}

// --- covers and sections -----------------------------------------------------

json encode(const CoverAlgebra& c) {
  if (const auto r = c.standard_cyclic_order()) return {{"r", *r}};
  json forms = json::array();
  for (const auto& f : c.structure_forms()) forms.push_back(encode(f));
  return {{"group", c.group().factors()}, {"twist_degrees", c.twist_degrees()}, {"forms", forms}};
}

CoverPtr decode_cover(const json& j, const std::string& ptr) {
  expect_object(j, ptr);
  if (j.contains("r")) {
    const int r = decode_int(j["r"], child(ptr, "r"));
    if (r < 1) throw SchemaError(child(ptr, "r"), "cover degree must be positive");
    if (r > 64) throw SchemaError(child(ptr, "r"), "cover degree above 64 is not supported");
    return make_standard_cyclic(r);
  }
  const auto factors = decode_ints(member(j, "group", ptr), child(ptr, "group"));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 1) throw SchemaError(child(child(ptr, "group"), i), "group factors must be positive");
  }
  const auto twists = decode_ints(member(j, "twist_degrees", ptr), child(ptr, "twist_degrees"));
  const json& jf = expect_array(member(j, "forms", ptr), child(ptr, "forms"));
  std::vector<BinForm> forms;
  for (std::size_t i = 0; i < jf.size(); ++i) forms.push_back(decode_binform(jf[i], child(child(ptr, "forms"), i)));
  auto algebra = rethrow_at(ptr, [&] { return CoverAlgebra(AbelianGroup(factors), twists, forms); });
  return std::make_shared<const CoverAlgebra>(std::move(algebra));
}

json encode(const SectionData& s) {
  json comps = json::object();
  for (const auto& [rho, h] : s.components()) comps[std::to_string(rho)] = encode(h);
  return {{"cover", encode(s.cover())}, {"d", s.twist_degree()}, {"components", comps}};
}

SectionData decode_section(const json& j, const std::string& ptr) {
  const CoverPtr cover = decode_cover(member(j, "cover", ptr), child(ptr, "cover"));
  const int d = decode_int(member(j, "d", ptr), child(ptr, "d"));
  const std::string cptr = child(ptr, "components");
  const json& jc = expect_object(member(j, "components", ptr), cptr);
  std::map<int, BinForm> comps;
  for (const auto& [key, value] : jc.items()) {
    const std::string kptr = child(cptr, key);
    int rho = 0;
    try {
      std::size_t used = 0;
      rho = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw SchemaError(kptr, "component keys are character indices");
    }
    if (rho < 0 || rho >= cover->order()) throw SchemaError(kptr, "character index out of range");
    BinForm h = decode_binform(value, kptr);
    const int want = d - cover->twist(rho);
    if (h.degree() != want) {
      throw SchemaError(kptr, "component " + key + " must have degree " + std::to_string(want) + ", got " +
                                  std::to_string(h.degree()));
    }
    comps.emplace(rho, std::move(h));
  }
  return rethrow_at(ptr, [&] { return SectionData(cover, d, std::move(comps)); });
}

json encode(const SplitBundle& b) { return b.degrees; }

SplitBundle decode_bundle(const json& j, const std::string& ptr) {
  SplitBundle b{decode_ints(j, ptr)};
  if (b.degrees.empty()) throw SchemaError(ptr, "a bundle needs at least one summand");
  return b;
}

// --- spectral data -----------------------------------------------------------

json encode(const SpectralPoly& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(encode(c));
  return {{"d", f.twist_degree()}, {"coeffs", coeffs}};
}

SpectralPoly decode_spectral(const json& j, const std::string& ptr) {
  const int d = decode_int(member(j, "d", ptr), child(ptr, "d"));
  const std::string cptr = child(ptr, "coeffs");
  const json& jc = expect_array(member(j, "coeffs", ptr), cptr);
  std::vector<BinForm> coeffs;
  for (std::size_t i = 0; i < jc.size(); ++i) coeffs.push_back(decode_binform(jc[i], child(cptr, i)));
  return rethrow_at(ptr, [&] { return SpectralPoly(d, std::move(coeffs)); });
}

json encode(const CharData& c) {
  json el = json::array(), co = json::array();
  for (const auto& f : c.elementary) el.push_back(encode(f));
  for (const auto& f : c.coefficients) co.push_back(encode(f));
  return {{"r", c.r}, {"d", c.d}, {"elementary", el}, {"coefficients", co}};
}

CharData decode_chardata(const json& j, const std::string& ptr) {
  CharData c;
  c.r = decode_int(member(j, "r", ptr), child(ptr, "r"));
  c.d = decode_int(member(j, "d", ptr), child(ptr, "d"));
  for (const char* key : {"elementary", "coefficients"}) {
    const std::string kptr = child(ptr, key);
    const json& arr = expect_array(member(j, key, ptr), kptr);
    if (static_cast<int>(arr.size()) != c.r) throw SchemaError(kptr, "expected r entries");
    auto& dst = std::string(key) == "elementary" ? c.elementary : c.coefficients;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      BinForm f = decode_binform(arr[i], child(kptr, i));
      if (f.degree() != static_cast<int>(i + 1) * c.d) throw SchemaError(child(kptr, i), "entry i has degree i*d");
      dst.push_back(std::move(f));
    }
  }
  return c;
}

json encode(const SingularPoint& p) {
  json eq = json::array();
  for (const auto& e : p.eta_equation) eq.push_back(encode(e.value()));
  return {{"chart", p.chart == Chart::T ? "t" : "s"},
          {"locus", encode(p.locus)},
          {"point", p.point ? encode(*p.point) : json(nullptr)},
          {"eta_equation", eq},
          {"eta", p.eta ? encode(p.eta->value()) : json(nullptr)},
          {"certificate", to_string(p.certificate)},
          {"text", to_string(p)}};
}

SingularPoint decode_singular(const json& j, const std::string& ptr) {
  SingularPoint p;
  p.chart = decode_chart(member(j, "chart", ptr), child(ptr, "chart"));
  p.locus = decode_unipoly(member(j, "locus", ptr), child(ptr, "locus"));
  if (p.locus.degree() < 1 || p.locus.leading() != 1) throw SchemaError(child(ptr, "locus"), "locus must be monic");
  const json& jp = member(j, "point", ptr);
  if (!jp.is_null()) p.point = decode_projpoint(jp, child(ptr, "point"));
  const std::string eptr = child(ptr, "eta_equation");
  const json& je = expect_array(member(j, "eta_equation", ptr), eptr);
  for (std::size_t i = 0; i < je.size(); ++i) {
    p.eta_equation.emplace_back(p.locus, decode_unipoly(je[i], child(eptr, i)));
  }
  const json& jeta = member(j, "eta", ptr);
  if (!jeta.is_null()) p.eta = ExtElem(p.locus, decode_unipoly(jeta, child(ptr, "eta")));
  static constexpr SingularityCertificate certs[] = {SingularityCertificate::Jacobian, SingularityCertificate::CubicCaseA,
                                                     SingularityCertificate::CubicCaseB,
                                                     SingularityCertificate::DoubleCover};
  p.certificate = decode_enum(member(j, "certificate", ptr), child(ptr, "certificate"), certs);
  return p;
}

// --- stability and factorization ---------------------------------------------

json encode(const HilbertPoly& p) {
  return {{"slope", encode(p.slope)}, {"constant", encode(p.constant)}, {"text", to_string(p)}};
}

HilbertPoly decode_hilbert(const json& j, const std::string& ptr) {
  return {decode_rat(member(j, "slope", ptr), child(ptr, "slope")),
          decode_rat(member(j, "constant", ptr), child(ptr, "constant"))};
}

json encode(const SubsheafRecord& r) {
  json kernel = json::array();
  for (const auto& k : r.kernel) kernel.push_back(encode(k));
  return {{"kind", r.kind == SubsheafKind::Block ? "block" : "eigen"},
          {"summands", r.summands},
          {"lambda", r.lambda ? encode(*r.lambda) : json(nullptr)},
          {"kernel", kernel},
          {"bundle", encode(r.bundle)},
          {"hilbert", encode(r.hilbert)},
          {"description", r.description()}};
}

SubsheafRecord decode_subsheaf(const json& j, const std::string& ptr) {
  SubsheafRecord r;
  const std::string kind = decode_string(member(j, "kind", ptr), child(ptr, "kind"));
  if (kind == "block") {
    r.kind = SubsheafKind::Block;
  } else if (kind == "eigen") {
    r.kind = SubsheafKind::Eigen;
  } else {
    throw SchemaError(child(ptr, "kind"), "kind must be \"block\" or \"eigen\"");
  }
  r.summands = decode_ints(member(j, "summands", ptr), child(ptr, "summands"));
  const json& jl = member(j, "lambda", ptr);
  if (!jl.is_null()) r.lambda = decode_unipoly(jl, child(ptr, "lambda"));
  const std::string kptr = child(ptr, "kernel");
  const json& jk = expect_array(member(j, "kernel", ptr), kptr);
  for (std::size_t i = 0; i < jk.size(); ++i) r.kernel.push_back(decode_unipoly(jk[i], child(kptr, i)));
  r.bundle = decode_bundle(member(j, "bundle", ptr), child(ptr, "bundle"));
  r.hilbert = decode_hilbert(member(j, "hilbert", ptr), child(ptr, "hilbert"));
  return r;
}

json encode(const StabilityVerdict& v) {
  return {{"status", to_string(v.status)},
          {"method", to_string(v.method)},
          {"witness", v.witness ? encode(*v.witness) : json(nullptr)},
          {"total", encode(v.total)},
          {"reasons", v.reasons}};
}

StabilityVerdict decode_verdict(const json& j, const std::string& ptr) {
  static constexpr StabilityStatus statuses[] = {StabilityStatus::Stable, StabilityStatus::StrictlySemistable,
                                                 StabilityStatus::Unstable, StabilityStatus::Undetermined};
  static constexpr StabilityMethod methods[] = {StabilityMethod::PropDoubleCover, StabilityMethod::PropStability,
                                                StabilityMethod::DirectSearch};
  StabilityVerdict v;
  v.status = decode_enum(member(j, "status", ptr), child(ptr, "status"), statuses);
  v.method = decode_enum(member(j, "method", ptr), child(ptr, "method"), methods);
  const json& jw = member(j, "witness", ptr);
  if (!jw.is_null()) v.witness = decode_subsheaf(jw, child(ptr, "witness"));
  v.total = decode_hilbert(member(j, "total", ptr), child(ptr, "total"));
  const std::string rptr = child(ptr, "reasons");
  const json& jr = expect_array(member(j, "reasons", ptr), rptr);
  for (std::size_t i = 0; i < jr.size(); ++i) v.reasons.push_back(decode_string(jr[i], child(rptr, i)));
  return v;
}

json encode(const FactorizationReport& r) {
  return {{"subcover_index", r.subcover_index},
          {"quotient_degree", r.quotient_degree},
          {"tau", encode(r.tau)},
          {"verdict", to_string(r.verdict)}};
}

FactorizationReport decode_factorization(const json& j, const std::string& ptr) {
  static constexpr CoverVerdict verdicts[] = {CoverVerdict::Nilpotent, CoverVerdict::Scalar, CoverVerdict::Birational,
                                              CoverVerdict::Factors};
  return {decode_int(member(j, "subcover_index", ptr), child(ptr, "subcover_index")),
          decode_int(member(j, "quotient_degree", ptr), child(ptr, "quotient_degree")),
          decode_section(member(j, "tau", ptr), child(ptr, "tau")),
          decode_enum(member(j, "verdict", ptr), child(ptr, "verdict"), verdicts)};
}

}  // namespace higgs::io
