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

#ifndef POLYDECOMP_CLIP_H_
#define POLYDECOMP_CLIP_H_

#include <span>
#include <vector>

#include "polydecomp/polytope.h"

namespace polydecomp {

// Bounded intersection of half-spaces with a box. Need not be simple. The
// constraint list is the 2n box facets (-x_k <= -lower_k, x_k <= upper_k for
// each k) followed by the clipped half-spaces in input order; `incidence[v]`
// is the sorted list of constraints tight at vertex v.
struct ClippedPolytope {
  int dim = 0;
  std::vector<HalfSpace> halfspaces;
  std::vector<QVector> vertices;
  std::vector<std::vector<int>> incidence;
  bool empty = false;
  bool full_dimensional = false;
};

ClippedPolytope Clip(std::span<const HalfSpace> halfspaces, const Box& box);

// Exact Lebesgue volume via a recursive base-vertex fan triangulation of the
// boundary. Empty or lower-dimensional input has volume 0.
Rational ExactVolume(const ClippedPolytope& q);

// Vertex-set volume of a full-dimensional simplex: |det(v_i - v_0)| / n!.
Rational SimplexVolume(const std::vector<QVector>& vertices);

}  // namespace polydecomp

#endif  // POLYDECOMP_CLIP_H_
