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

#ifndef POLYDECOMP_MEASURE_H_
#define POLYDECOMP_MEASURE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "polydecomp/decomposition.h"
#include "polydecomp/polytope.h"

namespace polydecomp {

// Grid used for sampled coordinates: every sample is a multiple of 2^-16.
inline constexpr long kSampleDenominator = 1L << 16;

// Deterministic stream of rational points and boxes. Raw 64-bit words come
// from std::mt19937_64 (its output sequence is fixed by the standard) and
// are mapped to grid points without std:: distributions, whose output is
// implementation-defined.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform over grid points strictly inside `region`.
  QVector NextPoint(const Box& region);

  // Box spanned by two grid points, coordinates ordered; pairs sharing a
  // coordinate are redrawn.
  Box NextBox(const Box& region);

 private:
  Rational NextCoordinate(const Rational& lo, const Rational& hi);

  std::mt19937_64 engine_;
};

// Throw kInvalidArgument when count < 1.
std::vector<QVector> SamplePoints(const Box& region, int count,
                                  std::uint64_t seed);
std::vector<Box> SampleBoxes(const Box& region, int count, std::uint64_t seed);

// Sum over cells of sign * vol(cell ∩ box), exact.
Rational SignedVolume(const Decomposition& d, const Box& box);

struct VerificationFailure {
  QVector point;           // pointwise samples
  std::optional<Box> box;  // measure samples
  Rational expected;
  Rational got;
};

struct VerificationReport {
  enum class Kind { kPointwise, kMeasure };
  Kind kind = Kind::kPointwise;
  int samples = 0;
  std::uint64_t seed = 0;
  bool avoid_facet_spans = false;  // pointwise only
  std::vector<VerificationFailure> failures;
  double elapsed_ms = 0;  // not part of the serialized report

  bool pass() const { return failures.empty(); }
};

// Checks IndicatorSum(d, x) == 1_P(x) at `points` seeded samples from
// BoundingBox(p, 2). With avoid_facet_spans, samples on any facet hyperplane
// are redrawn; without it, every vertex, edge midpoint and face witness is
// appended as a boundary probe.
VerificationReport VerifyPointwise(const SimplePolytope& p,
                                   const Decomposition& d, int points,
                                   std::uint64_t seed, bool avoid_facet_spans);

// Checks SignedVolume(d, B) == vol(P ∩ B) on `boxes` seeded boxes inside
// BoundingBox(p, 2).
VerificationReport VerifyMeasure(const SimplePolytope& p,
                                 const Decomposition& d, int boxes,
                                 std::uint64_t seed);

struct MonteCarloEstimate {
  double estimate = 0;
  double sigma = 0;  // binomial standard error
};

// Floating-point hit-or-miss volume of (∩ halfspaces) ∩ box. samples >= 1000.
MonteCarloEstimate MonteCarloVolume(std::span<const HalfSpace> halfspaces,
                                    const Box& box, int samples,
                                    std::uint64_t seed);

}  // namespace polydecomp

#endif  // POLYDECOMP_MEASURE_H_
