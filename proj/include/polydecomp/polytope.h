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

#ifndef POLYDECOMP_POLYTOPE_H_
#define POLYDECOMP_POLYTOPE_H_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polydecomp/rational.h"

namespace polydecomp {

// {x : <normal, x> <= offset}.
struct HalfSpace {
  QVector normal;
  Rational offset;

  bool operator==(const HalfSpace&) const = default;
};

// Rescales by a positive factor so that the normal is a primitive integer
// vector. The normal must be nonzero.
HalfSpace Canonicalize(const HalfSpace& h);

// Signed slack <normal, x> - offset (<= 0 inside).
Rational Excess(const HalfSpace& h, std::span<const Rational> x);

bool Satisfies(std::span<const HalfSpace> halfspaces,
               std::span<const Rational> x);

struct Vertex {
  QVector point;
  std::vector<int> active;  // every tight half-space index, sorted
};

// A face F_I of a simple polytope, keyed by its sorted active set I.
struct Face {
  std::vector<int> active;
  int dim = 0;
  std::vector<int> vertex_ids;
  QVector witness;  // vertex barycenter, lies in the relative interior
};

// Axis-aligned box with lower[i] < upper[i].
struct Box {
  QVector lower;
  QVector upper;

  int dim() const { return static_cast<int>(lower.size()); }
  Rational Volume() const;
  bool operator==(const Box&) const = default;
};

enum class VertexCheck { kRequireSimple, kAllowDegenerate };

// Solves every n-subset of constraints with invertible normal matrix and
// keeps the feasible solutions, merging duplicates. Each vertex records its
// full tight set. With kRequireSimple, a vertex tight on more than `dim`
// half-spaces raises NotSimple. Vertices are ordered by active set.
std::vector<Vertex> EnumerateVertices(std::span<const HalfSpace> halfspaces,
                                      int dim,
                                      VertexCheck check =
                                          VertexCheck::kRequireSimple);

// Bounded, full-dimensional, simple, irredundant polytope in Q^n. Immutable
// after construction.
class SimplePolytope {
 public:
  // Canonicalizes and validates; throws Error with kUnbounded,
  // kNotFullDimensional, kNotSimple, kRedundantHalfSpace, kMalformedInput.
  static SimplePolytope FromHalfSpaces(int dim,
                                       std::vector<HalfSpace> halfspaces);

  int dim() const { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  // Faces in canonical order: by number of active constraints, then
  // lexicographically by active set. faces()[0] is the polytope itself.
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_.at(id); }
  std::optional<int> FindFace(const std::vector<int>& active) const;

  // Face id of the 0-dimensional face at vertex `vertex_id`.
  int VertexFace(int vertex_id) const;

  // Closed membership.
  bool Contains(std::span<const Rational> x) const;

  // Active normals of `f` as matrix rows.
  std::vector<QVector> ActiveNormals(const Face& f) const;

 private:
  SimplePolytope() = default;

  int dim_ = 0;
  std::vector<HalfSpace> halfspaces_;
  std::vector<Vertex> vertices_;
  std::vector<Face> faces_;
  std::map<std::vector<int>, int> face_index_;
};

// All faces of a polytope whose vertices are already enumerated, in the
// canonical order described on SimplePolytope::faces().
std::vector<Face> EnumerateFaces(int dim, const std::vector<Vertex>& vertices);

// x in relint F: tight on I(F), strictly inside every other half-space.
bool RelintContains(const SimplePolytope& p, const Face& f,
                    std::span<const Rational> x);

// Euclidean orthogonal projection of c onto aff F.
QVector AffineProjection(const SimplePolytope& p, const Face& f,
                         const QVector& c);

// Vertex bounding box, each side scaled by `inflate` (>= 1) about its center.
Box BoundingBox(const SimplePolytope& p, const Rational& inflate);

}  // namespace polydecomp

#endif  // POLYDECOMP_POLYTOPE_H_
