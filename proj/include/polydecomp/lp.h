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

#ifndef POLYDECOMP_LP_H_
#define POLYDECOMP_LP_H_

#include <vector>

#include "polydecomp/rational.h"

namespace polydecomp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  QVector coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// maximize <objective, x> subject to `constraints`; variable i is
// sign-constrained (x_i >= 0) iff nonnegative[i], free otherwise.
struct LinearProgram {
  int num_vars = 0;
  std::vector<bool> nonnegative;
  QVector objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;     // valid when kOptimal
  QVector solution;   // valid when kOptimal
  int pivots = 0;
};

// Exact two-phase tableau simplex. Bland's smallest-index rule is used for
// both the entering and the leaving variable, so the method terminates on
// degenerate problems.
LpResult Maximize(const LinearProgram& lp);

}  // namespace polydecomp

#endif  // POLYDECOMP_LP_H_
