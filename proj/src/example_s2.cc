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

#include "polydecomp/example_s2.h"

#include "polydecomp/builders.h"
#include "polydecomp/measure.h"
#include "polydecomp/taming.h"

namespace polydecomp {
namespace {

constexpr std::uint64_t kSeed = 7;
constexpr int kBoxes = 32;
constexpr int kPoints = 1000;

struct Entry {
  const char* name;
  TamingSpec spec;
  const char* description;
};

}  // namespace

Json ExampleS2() {
  const SimplePolytope p = Interval(-1, 1);
  const Entry entries[] = {
      {"linear", TamingSpec::Linear({Rational(1)}),
       "linear taming by eta = 1: one polarized ray per fixed point, the "
       "Lawrence-Varchenko decomposition +[-1,inf), -[1,inf)"},
      {"norm-square", TamingSpec::NormSquare({Rational(0)}),
       "norm-square taming centred at 0: one cell per critical face, "
       "-[1,inf), -(-inf,-1], +R"},
      {"negative-norm-square", TamingSpec::NegNormSquare({Rational(0)}),
       "negative norm-square taming centred at 0: the tangent cones of every "
       "face, the Brianchon-Gram decomposition +[-1,inf), +(-inf,1], -R"},
  };
  Json decompositions = Json::array();
  bool all_pass = true;
  for (const Entry& e : entries) {
    const Decomposition d = InducedDecomposition(p, e.spec);
    const VerificationReport measure = VerifyMeasure(p, d, kBoxes, kSeed);
    const bool avoid = d.kind != DecompositionKind::kBrianchonGram;
    const VerificationReport pointwise =
        VerifyPointwise(p, d, kPoints, kSeed, avoid);
    all_pass = all_pass && measure.pass() && pointwise.pass();
    decompositions.push_back(
        Json{{"name", e.name},
             {"taming",
              Json{{"rho", TamingKindName(e.spec.kind)},
                   {"vector", VectorToJson(e.spec.vector)}}},
             {"description", e.description},
             {"decomposition", DecompositionToJson(d)},
             {"measure", ReportToJson(measure)},
             {"pointwise", ReportToJson(pointwise)}});
  }
  return Json{{"example", "circle action on the 2-sphere"},
              {"polytope", PolytopeToJson(p)},
              {"pass", all_pass},
              {"decompositions", decompositions}};
}

}  // namespace polydecomp
