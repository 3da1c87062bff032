// Copyright 2026 The polydecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYDECOMP_IO_H_
#define POLYDECOMP_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polydecomp/decomposition.h"
#include "polydecomp/measure.h"
#include "polydecomp/polytope.h"
#include "polydecomp/taming.h"

namespace polydecomp {

using Json = nlohmann::ordered_json;

// Rationals are written as strings ("3", "-1/2"); reading also accepts JSON
// integers. Floating-point JSON numbers are rejected.
Json RationalToJson(const Rational& r);
Rational RationalFromJson(const Json& j);
Json VectorToJson(std::span<const Rational> v);
QVector VectorFromJson(const Json& j);

Json HalfSpaceToJson(const HalfSpace& h);
HalfSpace HalfSpaceFromJson(const Json& j);

// {"dim": n, "halfspaces": [{"a": [...], "b": ...}, ...]}
Json PolytopeToJson(const SimplePolytope& p);
SimplePolytope PolytopeFromJson(const Json& j);
SimplePolytope ParsePolytope(std::string_view text);

Json FaceLatticeToJson(const SimplePolytope& p);

Json DecompositionToJson(const Decomposition& d);
Decomposition DecompositionFromJson(const Json& j);

Json ReportToJson(const VerificationReport& r);

Json LocalizingSetToJson(const SimplePolytope& p, const TamingSpec& spec,
                         const std::vector<LocalizingComponent>& components);

Json AssumptionToJson(const SimplePolytope& p,
                      const std::vector<AssumptionCheck>& checks);

Json AdmissibleCenterToJson(const SimplePolytope& p,
                            const std::optional<AdmissibleCenter>& center);

// {"entries": [{"active": [...], "point": [...], "alpha": ...}, ...]}
Json MorseDataToJson(const MorseData& data);
MorseData MorseDataFromJson(const Json& j);
Json MorseViolationsToJson(const std::vector<MorseViolation>& violations);

// Parses text as JSON, mapping syntax errors to kMalformedInput.
Json ParseJson(std::string_view text);

// Two-space indented dump with a trailing newline.
std::string Dump(const Json& j);

}  // namespace polydecomp

#endif  // POLYDECOMP_IO_H_
