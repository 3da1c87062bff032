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

#ifndef POLYDECOMP_TAMING_H_
#define POLYDECOMP_TAMING_H_

#include <optional>
#include <string>
#include <vector>

#include "polydecomp/decomposition.h"
#include "polydecomp/polytope.h"

namespace polydecomp {

// The function rho whose differential composed with the momentum map is the
// taming map: <x, eta>, |x - c|^2 or -|x - c|^2.
struct TamingSpec {
  enum class Kind { kLinear, kNormSquare, kNegNormSquare };
  Kind kind = Kind::kLinear;
  QVector vector;  // eta or c

  static TamingSpec Linear(QVector eta);
  static TamingSpec NormSquare(QVector c);
  static TamingSpec NegNormSquare(QVector c);

  Rational Evaluate(std::span<const Rational> x) const;
};

const char* TamingKindName(TamingSpec::Kind kind);

// Critical point of rho restricted to the affine hull of one face.
struct LocalizingComponent {
  int face_id = 0;
  QVector critical_point;
  Rational critical_value;
  bool in_relint = true;
  // Linear rho constant on a positive-dimensional face: every point of the
  // face is critical. critical_point is then the face witness.
  bool non_isolated = false;
};

std::vector<LocalizingComponent> LocalizingSet(const SimplePolytope& p,
                                               const TamingSpec& spec);

struct AssumptionCheck {
  int face_id = 0;
  bool pass = false;
  QVector projection;
};

// Per face: does the closest point of aff F to c lie in relint F?
std::vector<AssumptionCheck> CheckAssumption(const SimplePolytope& p,
                                             const QVector& c);

struct AdmissibleCenter {
  QVector center;
  Rational margin;
};

// Exact LP search for a center whose projection onto every face lies in the
// relative interior, maximizing the L1-weighted slack margin inside
// BoundingBox(p, 2). nullopt means no admissible center in that box.
std::optional<AdmissibleCenter> FindAdmissibleCenter(const SimplePolytope& p);

// One vector per active facet j of f: <a_j, xi_j> < 0 and <a_i, xi_j> = 0 for
// the other active facets i. xi_j is the negated component of a_j orthogonal
// to the other active normals, scaled primitive.
std::vector<QVector> DualEdgeFrame(const SimplePolytope& p, int face_id);

struct MorseEntry {
  std::vector<int> active;
  QVector point;
  Rational alpha;
};

struct MorseData {
  std::vector<MorseEntry> entries;
};

// x_F = face witness, alpha_F = codim F.
MorseData GenerateMorseData(const SimplePolytope& p);

// x_F = projection of c onto aff F, alpha_F = |x_F - c|^2.
MorseData NormSquareMorseData(const SimplePolytope& p, const QVector& c);

struct MorseViolation {
  enum class Kind { kMissingFace, kUnknownFace, kNotInRelint, kOrder };
  Kind kind = Kind::kMissingFace;
  std::vector<int> face;     // active set
  std::vector<int> subface;  // for kOrder
  std::string message;
};

// Empty result means valid: every face has an entry with x_F in relint F,
// and alpha_F < alpha_G whenever G is a proper subface of F.
std::vector<MorseViolation> VerifyMorseData(const SimplePolytope& p,
                                            const MorseData& data);

// Linear -> Lawrence-Varchenko, NormSquare -> Witten,
// NegNormSquare -> Brianchon-Gram (the center only enters the provenance).
Decomposition InducedDecomposition(const SimplePolytope& p,
                                   const TamingSpec& spec);

}  // namespace polydecomp

#endif  // POLYDECOMP_TAMING_H_
