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

#ifndef POLYDECOMP_DECOMPOSITION_H_
#define POLYDECOMP_DECOMPOSITION_H_

#include <span>
#include <string>
#include <vector>

#include "polydecomp/polytope.h"

namespace polydecomp {

// C_F as the intersection of the half-spaces active on F. An empty list
// means all of R^n (F = the polytope itself).
struct TangentCone {
  int face_id = 0;
  std::vector<HalfSpace> halfspaces;
  QVector apex_witness;
};

TangentCone MakeTangentCone(const SimplePolytope& p, int face_id);

// Decides x in C_F straight from the generator description
// {x0 + t (y - x0) : y in P, t >= 0} with x0 the face witness, by an exact
// LP feasibility check. Independent of the active-constraint form.
bool InTangentConeByDefinition(const SimplePolytope& p, int face_id,
                               const QVector& x);

// Edge directions at a vertex, pointing into the polytope. generators[k]
// leaves facet active[k] and stays on every other active facet.
struct EdgeFrame {
  int vertex_id = 0;
  std::vector<int> active;
  std::vector<QVector> generators;  // primitive integer vectors
};

EdgeFrame MakeEdgeFrame(const SimplePolytope& p, int vertex_id);

enum class DecompositionKind { kBrianchonGram, kLawrenceVarchenko, kWitten };

const char* DecompositionKindName(DecompositionKind kind);

struct Provenance {
  enum class Kind { kFace, kVertex };
  Kind kind = Kind::kFace;
  int id = 0;               // face id or vertex id
  std::vector<int> active;  // active set of that face / vertex

  bool operator==(const Provenance&) const = default;
};

struct SignedCell {
  std::vector<HalfSpace> halfspaces;  // closed; empty list = R^n
  int sign = 1;
  Provenance provenance;
  // Exponent of the sign: dim F for Brianchon-Gram cells, the number of
  // flipped generators for Lawrence-Varchenko and Witten cells.
  int flip_count = 0;
  // LV: one flag per edge generator; Witten: one flag per active facet of
  // the face. Empty for Brianchon-Gram cells.
  std::vector<bool> flips;

  bool operator==(const SignedCell&) const = default;
};

struct Decomposition {
  int dim = 0;
  std::vector<HalfSpace> polytope;  // the decomposed polytope
  DecompositionKind kind = DecompositionKind::kBrianchonGram;
  QVector parameter;  // eta for LV, center for Witten, empty for BG
  std::vector<SignedCell> cells;
};

// One cell per face: C_F with sign (-1)^dim F.
Decomposition BrianchonGram(const SimplePolytope& p);

// One cell per vertex: the vertex cone with every edge generator g with
// <eta, g> < 0 flipped, sign (-1)^flips. Throws kGenericityFailure when some
// pairing vanishes.
Decomposition LawrenceVarchenko(const SimplePolytope& p, const QVector& eta);

// Norm-square decomposition for an admissible center c. Throws
// kAssumptionViolated (listing failing face ids) when c is not admissible
// and kDegeneratePairing when a normal generator is orthogonal to the
// gradient 2 (x_F - c).
Decomposition Witten(const SimplePolytope& p, const QVector& c);

// The Witten cell of face `face_id`, with the normal generators taken from
// the edge frame of `vertex_id` (a vertex of that face). Witten() uses the
// lowest vertex id; the cell must not depend on the choice.
SignedCell WittenCell(const SimplePolytope& p, int face_id, int vertex_id,
                      const QVector& c);

// Sum over cells of sign * [x in cell].
int IndicatorSum(const Decomposition& d, std::span<const Rational> x);

}  // namespace polydecomp

#endif  // POLYDECOMP_DECOMPOSITION_H_
