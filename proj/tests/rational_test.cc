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

#include "polydecomp/error.h"
#include "polydecomp/linalg.h"
#include "polydecomp/rational.h"
#include "test_support.h"

namespace polydecomp {
namespace {

using testing::Q;
using testing::V;

TEST(RationalTest, ParsesIntegersAndFractionsCanonically) {
  EXPECT_EQ(ParseRational("7"), Rational(7));
  EXPECT_EQ(ParseRational("-3"), Rational(-3));
  EXPECT_EQ(ParseRational("+3"), Rational(3));
  EXPECT_EQ(ParseRational("2/4"), Frac(1, 2));
  EXPECT_THROW(ParseRational("6/-4"), Error);
  EXPECT_EQ(ParseRational("-6/4").get_den(), 2);
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "1//2", "1e3"}) {
    try {
      ParseRational(bad);
      ADD_FAILURE() << "accepted \"" << bad << "\"";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedRational) << bad;
    }
  }
}

TEST(RationalTest, FormatsCanonicalForms) {
  EXPECT_EQ(ToString(Frac(4, -6)), "-2/3");
  EXPECT_EQ(ToString(Rational(5)), "5");
  EXPECT_EQ(ToString(V({"1/2", "-1"})), "(1/2, -1)");
}

TEST(RationalTest, VectorHelpers) {
  const QVector a = V({"1/2", "2"});
  const QVector b = V({"-1", "1/3"});
  EXPECT_EQ(Dot(a, b), Q("1/6"));
  EXPECT_EQ(Add(a, b), V({"-1/2", "7/3"}));
  EXPECT_EQ(Subtract(a, b), V({"3/2", "5/3"}));
  EXPECT_EQ(Scale(Q("2"), a), V({"1", "4"}));
  EXPECT_EQ(L1Norm(b), Q("4/3"));
  EXPECT_TRUE(IsZero(V({"0", "0"})));
  EXPECT_FALSE(IsZero(a));
}

TEST(RationalTest, PrimitiveDirectionKeepsOrientation) {
  Rational factor;
  EXPECT_EQ(PrimitiveDirection(V({"2/3", "-4/3"}), &factor), V({"1", "-2"}));
  EXPECT_EQ(factor, Q("3/2"));
  EXPECT_EQ(PrimitiveDirection(V({"-6", "0", "9"})), V({"-2", "0", "3"}));
}

TEST(LinalgTest, RankAndDeterminant) {
  EXPECT_EQ(Rank({V({"1", "2"}), V({"2", "4"})}), 1);
  EXPECT_EQ(Rank({V({"1", "2"}), V({"0", "1"})}), 2);
  EXPECT_EQ(Determinant({V({"1", "2"}), V({"3", "4"})}), Q("-2"));
  EXPECT_EQ(Determinant({V({"0", "1"}), V({"1", "0"})}), Q("-1"));
}

TEST(LinalgTest, SolveSquareCarriesTheRightHandSide) {
  const auto x = SolveSquare({V({"-1"})}, V({"1"}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, V({"-1"}));
  const auto y = SolveSquare({V({"2", "1"}), V({"1", "3"})}, V({"1", "2"}));
  ASSERT_TRUE(y);
  EXPECT_EQ(*y, V({"1/5", "3/5"}));
  EXPECT_FALSE(SolveSquare({V({"1", "1"}), V({"2", "2"})}, V({"1", "1"})));
}

TEST(LinalgTest, InverseRoundTrips) {
  const Matrix a = {V({"2", "1"}), V({"1", "3"})};
  const auto inv = Inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, (Matrix{V({"3/5", "-1/5"}), V({"-1/5", "2/5"})}));
}

TEST(LinalgTest, NullSpaceIsOrthogonalToRows) {
  const Matrix m = {V({"1", "1", "1"})};
  const auto basis = NullSpace(m, 3);
  ASSERT_EQ(basis.size(), 2u);
  for (const auto& v : basis) EXPECT_EQ(Dot(m[0], v), 0);
  EXPECT_EQ(Rank(basis), 2);
  EXPECT_EQ(NullSpace({}, 2).size(), 2u);
}

TEST(LinalgTest, ProjectionOntoRowSpace) {
  EXPECT_EQ(ProjectOntoRowSpace({V({"1", "1"})}, V({"1", "0"})),
            V({"1/2", "1/2"}));
  EXPECT_EQ(ProjectOntoRowSpace({}, V({"1", "0"})), V({"0", "0"}));
}

TEST(LinalgTest, AffineDimension) {
  EXPECT_EQ(AffineDimension({}), -1);
  EXPECT_EQ(AffineDimension({V({"1", "1"})}), 0);
  EXPECT_EQ(AffineDimension({V({"0", "0"}), V({"1", "1"}), V({"2", "2"})}), 1);
  EXPECT_EQ(AffineDimension({V({"0", "0"}), V({"1", "0"}), V({"0", "1"})}), 2);
}

}  // namespace
}  // namespace polydecomp
