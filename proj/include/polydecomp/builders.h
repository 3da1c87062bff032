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

#ifndef POLYDECOMP_BUILDERS_H_
#define POLYDECOMP_BUILDERS_H_

#include <cstdint>

#include "polydecomp/polytope.h"

namespace polydecomp {

// [lo, hi] in dimension 1.
SimplePolytope Interval(const Rational& lo, const Rational& hi);

// conv(0, e_1, ..., e_n).
SimplePolytope StandardSimplex(int n);

// [0,1]^n.
SimplePolytope UnitCube(int n);

// P x Q in dimension dim P + dim Q.
SimplePolytope Product(const SimplePolytope& p, const SimplePolytope& q);

// Cuts off vertex `vertex_id` by the hyperplane through the points at
// fraction `depth` (0 < depth < 1) along each incident edge. Halves the depth
// until the cut removes exactly that vertex.
SimplePolytope TruncateVertex(const SimplePolytope& p, int vertex_id,
                              Rational depth);

// Seeded random simple polytope of dimension 2 or 3: a simplex, cube or
// product base with one to three random vertex truncations.
SimplePolytope RandomSimplePolytope(int dim, std::uint64_t seed);

}  // namespace polydecomp

#endif  // POLYDECOMP_BUILDERS_H_
