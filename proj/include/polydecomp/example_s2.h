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

#ifndef POLYDECOMP_EXAMPLE_S2_H_
#define POLYDECOMP_EXAMPLE_S2_H_

#include "polydecomp/io.h"

namespace polydecomp {

// The circle action on the 2-sphere has the height function as momentum
// map, with image the interval [-1, 1]. Builds that interval, runs the three
// taming choices (linear with eta = 1, norm-square and negative norm-square
// centred at 0) through the decomposition pipeline, verifies each result on
// 32 seeded boxes (seed 7) and on 1000 seeded points, and returns the
// annotated documents. The output is deterministic.
Json ExampleS2();

}  // namespace polydecomp

#endif  // POLYDECOMP_EXAMPLE_S2_H_
