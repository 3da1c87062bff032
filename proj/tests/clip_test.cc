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

#include <gtest/gtest.h>

#include <algorithm>

#include "polydecomp/clip.h"
#include "test_support.h"

namespace polydecomp {
namespace {

using testing::H;
using testing::Q;
using testing::V;

Box B(std::initializer_list<const char*> lo,
      std::initializer_list<const char*> hi) {
  return {V(lo), V(hi)};
}

bool HasVertex(const ClippedPolytope& q, const QVector& x) {
  return std::find(q.vertices.begin(), q.vertices.end(), x) !=
         q.vertices.end();
}

TEST(ClipTest, QuadrantClippedToTheUnitSquare) {
  const std::vector<HalfSpace> cone = {H({"-1", "0"}, "0"),
                                       H({"0", "-1"}, "0")};
  const auto q = Clip(cone, B({"-1", "-1"}, {"1", "1"}));
  EXPECT_FALSE(q.empty);
  EXPECT_TRUE(q.full_dimensional);
  ASSERT_EQ(q.vertices.size(), 4u);
  for (const auto& v : {V({"0", "0"}), V({"1", "0"}), V({"0", "1"}),
                        V({"1", "1"})}) {
    EXPECT_TRUE(HasVertex(q, v));
  }
  EXPECT_EQ(ExactVolume(q), 1);
  ASSERT_EQ(q.incidence.size(), q.vertices.size());
  for (const auto& inc : q.incidence) EXPECT_GE(inc.size(), 2u);
}

TEST(ClipTest, DisjointHalfPlaneIsEmpty) {
  const auto q = Clip(std::vector<HalfSpace>{H({"0", "-1"}, "-2")},
                      B({"0", "0"}, {"1", "1"}));
  EXPECT_TRUE(q.empty);
  EXPECT_EQ(ExactVolume(q), 0);
}

TEST(ClipTest, WedgeClippedToATriangleOfAreaOne) {
  // {y >= x, y >= -x} within [-1,1]^2 is the triangle (0,0), (1,1), (-1,1).
  const std::vector<HalfSpace> wedge = {H({"1", "-1"}, "0"),
                                        H({"-1", "-1"}, "0")};
  const auto q = Clip(wedge, B({"-1", "-1"}, {"1", "1"}));
  ASSERT_EQ(q.vertices.size(), 3u);
  for (const auto& v : {V({"0", "0"}), V({"1", "1"}), V({"-1", "1"})}) {
    EXPECT_TRUE(HasVertex(q, v));
  }
  EXPECT_EQ(ExactVolume(q), 1);
}

TEST(ClipTest, LowerDimensionalClipHasVolumeZero) {
  const std::vector<HalfSpace> line = {H({"1", "0"}, "0"), H({"-1", "0"}, "0")};
  const auto q = Clip(line, B({"-1", "-1"}, {"1", "1"}));
  EXPECT_FALSE(q.empty);
  EXPECT_FALSE(q.full_dimensional);
  EXPECT_EQ(ExactVolume(q), 0);
}

TEST(ClipTest, UnconstrainedClipIsTheBox) {
  const auto q = Clip({}, B({"0", "0", "0"}, {"1/2", "2", "3"}));
  EXPECT_EQ(q.vertices.size(), 8u);
  EXPECT_EQ(ExactVolume(q), 3);
}

TEST(VolumeTest, StandardSimplexVolumes) {
  EXPECT_EQ(ExactVolume(Clip(StandardSimplex(2).halfspaces(),
                             B({"-1", "-1"}, {"2", "2"}))),
            Q("1/2"));
  EXPECT_EQ(ExactVolume(Clip(StandardSimplex(3).halfspaces(),
                             B({"-1", "-1", "-1"}, {"2", "2", "2"}))),
            Q("1/6"));
  EXPECT_EQ(ExactVolume(Clip(StandardSimplex(4).halfspaces(),
                             B({"-1", "-1", "-1", "-1"}, {"2", "2", "2", "2"}))),
            Q("1/24"));
  EXPECT_EQ(SimplexVolume({V({"0", "0"}), V({"2", "0"}), V({"0", "3"})}), 3);
}

TEST(VolumeTest, IrregularPolygon) {
  // The square with the corner x + y > 3/2 cut off: 1 - 1/8.
  auto hs = testing::Square().halfspaces();
  hs.push_back(H({"1", "1"}, "3/2"));
  EXPECT_EQ(ExactVolume(Clip(hs, B({"-1", "-1"}, {"2", "2"}))), Q("7/8"));
}

TEST(VolumePropertyTest, AdditiveUnderCoordinateSplits) {
  const std::vector<Rational> cuts = {Q("1/3"), Q("-1/7"), Q("2/5")};
  for (const auto& [name, p] : testing::AllFixtures()) {
    const Box box = BoundingBox(p, Q("3/2"));
    const Rational whole = ExactVolume(Clip(p.halfspaces(), box));
    for (int k = 0; k < p.dim(); ++k) {
      const Rational mid =
          box.lower[k] + (box.upper[k] - box.lower[k]) * cuts[k % 3] +
          (box.upper[k] - box.lower[k]) * Q("1/5");
      Box left = box, right = box;
      left.upper[k] = mid;
      right.lower[k] = mid;
      EXPECT_EQ(ExactVolume(Clip(p.halfspaces(), left)) +
                    ExactVolume(Clip(p.halfspaces(), right)),
                whole)
          << name << " axis " << k;
    }
  }
}

TEST(VolumePropertyTest, TranslationInvariantAndHomogeneous) {
  for (const auto& [name, p] : testing::AllFixtures()) {
    const int n = p.dim();
    const Box box = BoundingBox(p, 2);
    const Rational base = ExactVolume(Clip(p.halfspaces(), box));
    QVector t(n);
    for (int k = 0; k < n; ++k) t[k] = Frac(k + 1, 3);
    const Rational s = Q("3/2");
    std::vector<HalfSpace> moved, scaled;
    for (const auto& h : p.halfspaces()) {
      moved.push_back({h.normal, h.offset + Dot(h.normal, t)});
      scaled.push_back({h.normal, h.offset * s});
    }
    const Box moved_box{Add(box.lower, t), Add(box.upper, t)};
    const Box scaled_box{Scale(s, box.lower), Scale(s, box.upper)};
    EXPECT_EQ(ExactVolume(Clip(moved, moved_box)), base) << name;
    Rational factor = 1;
    for (int k = 0; k < n; ++k) factor *= s;
    EXPECT_EQ(ExactVolume(Clip(scaled, scaled_box)), base * factor) << name;
  }
}

}  // namespace
}  // namespace polydecomp
