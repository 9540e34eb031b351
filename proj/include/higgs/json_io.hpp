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

// JSON encodings of the domain types. Rationals are "p" or "p/q" strings,
// polynomials are ascending coefficient arrays, and binary forms are
// {"degree": n, "coeffs": [...]} with coefficient i belonging to s^i t^(n-i).
// Decoders take the JSON pointer of their argument for error reporting and
// throw SchemaError.

#include <json.hpp>
#include <string>

#include "higgs/covers.hpp"
#include "higgs/factorization.hpp"
#include "higgs/spectral.hpp"
#include "higgs/stability.hpp"

namespace higgs::io {

using json = nlohmann::json;

json encode(const Rat& x);
json encode(const UniPoly& p);
json encode(const BinForm& f);
json encode(const ProjPoint& p);
json encode(const ExtElem& e);
json encode(const CoverAlgebra& c);
json encode(const SectionData& s);
json encode(const SplitBundle& b);
json encode(const SpectralPoly& f);
json encode(const CharData& c);
json encode(const SingularPoint& p);
json encode(const HilbertPoly& p);
json encode(const SubsheafRecord& r);
json encode(const StabilityVerdict& v);
json encode(const FactorizationReport& r);

int decode_int(const json& j, const std::string& ptr);
Rat decode_rat(const json& j, const std::string& ptr);
UniPoly decode_unipoly(const json& j, const std::string& ptr);
/// Accepts the object form, or a bare array whose length fixes the degree.
BinForm decode_binform(const json& j, const std::string& ptr);
ProjPoint decode_projpoint(const json& j, const std::string& ptr);
ExtElem decode_ext(const json& j, const std::string& ptr);
/// Accepts {"r": n} for the standard cyclic cover or the full presentation.
CoverPtr decode_cover(const json& j, const std::string& ptr);
SectionData decode_section(const json& j, const std::string& ptr);
SplitBundle decode_bundle(const json& j, const std::string& ptr);
SpectralPoly decode_spectral(const json& j, const std::string& ptr);
CharData decode_chardata(const json& j, const std::string& ptr);
SingularPoint decode_singular(const json& j, const std::string& ptr);
HilbertPoly decode_hilbert(const json& j, const std::string& ptr);
SubsheafRecord decode_subsheaf(const json& j, const std::string& ptr);
StabilityVerdict decode_verdict(const json& j, const std::string& ptr);
FactorizationReport decode_factorization(const json& j, const std::string& ptr);

/// Member lookup that throws SchemaError when the key is missing.
const json& member(const json& j, const std::string& key, const std::string& ptr);

}  // namespace higgs::io
