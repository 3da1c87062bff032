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

#include "polydecomp/builders.h"

#include <algorithm>
#include <iterator>
#include <random>

#include "polydecomp/error.h"
#include "polydecomp/linalg.h"

namespace polydecomp {

SimplePolytope Interval(const Rational& lo, const Rational& hi) {
  return SimplePolytope::FromHalfSpaces(1, {{{-1}, -lo}, {{1}, hi}});
}

SimplePolytope StandardSimplex(int n) {
  std::vector<HalfSpace> hs;
  for (int k = 0; k < n; ++k) {
    QVector a(n);
    a[k] = -1;
    hs.push_back({a, 0});
  }
  hs.push_back({QVector(n, 1), 1});
  return SimplePolytope::FromHalfSpaces(n, std::move(hs));
}

SimplePolytope UnitCube(int n) {
  std::vector<HalfSpace> hs;
  for (int k = 0; k < n; ++k) {
    QVector a(n);
    a[k] = -1;
    hs.push_back({a, 0});
    a[k] = 1;
    hs.push_back({a, 1});
  }
  return SimplePolytope::FromHalfSpaces(n, std::move(hs));
}

SimplePolytope Product(const SimplePolytope& p, const SimplePolytope& q) {
  const int n = p.dim() + q.dim();
  std::vector<HalfSpace> hs;
  for (const auto& h : p.halfspaces()) {
    QVector a(n);
    std::copy(h.normal.begin(), h.normal.end(), a.begin());
    hs.push_back({a, h.offset});
  }
  for (const auto& h : q.halfspaces()) {
    QVector a(n);
    std::copy(h.normal.begin(), h.normal.end(), a.begin() + p.dim());
    hs.push_back({a, h.offset});
  }
  return SimplePolytope::FromHalfSpaces(n, std::move(hs));
}

SimplePolytope TruncateVertex(const SimplePolytope& p, int vertex_id,
                              Rational depth) {
  const int n = p.dim();
  const Vertex& q = p.vertices().at(vertex_id);
  std::vector<QVector> neighbors;
  for (size_t w = 0; w < p.vertices().size(); ++w) {
    std::vector<int> common;
    const auto& other = p.vertices()[w].active;
    std::set_intersection(q.active.begin(), q.active.end(), other.begin(),
                          other.end(), std::back_inserter(common));
    if (static_cast<int>(common.size()) == n - 1) {
      neighbors.push_back(p.vertices()[w].point);
    }
  }
  for (int attempt = 0; attempt < 8; ++attempt, depth /= 2) {
    std::vector<QVector> cut;
    for (const auto& w : neighbors) {
      cut.push_back(Add(q.point, Scale(depth, Subtract(w, q.point))));
    }
    Matrix diffs;
    for (size_t i = 1; i < cut.size(); ++i) {
      diffs.push_back(Subtract(cut[i], cut[0]));
    }
    QVector normal = diffs.empty() ? QVector{1} : NullSpace(diffs, n).at(0);
    Rational offset = Dot(normal, cut[0]);
    if (Dot(normal, q.point) < offset) {
      normal = Scale(-1, normal);
      offset = -offset;
    }
    auto hs = p.halfspaces();
    hs.push_back({normal, offset});
    SimplePolytope out = SimplePolytope::FromHalfSpaces(n, std::move(hs));
    if (out.vertices().size() == p.vertices().size() + n - 1) return out;
  }
  throw Error(ErrorCode::kInvalidArgument, "vertex truncation failed");
}

SimplePolytope RandomSimplePolytope(int dim, std::uint64_t seed) {
  if (dim != 2 && dim != 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "random fixtures exist in dimension 2 and 3 only");
  }
  std::mt19937_64 rng(seed);
  SimplePolytope p = [&] {
    switch (rng() % 3) {
      case 0:
        return StandardSimplex(dim);
      case 1:
        return UnitCube(dim);
      default:
        return dim == 2 ? Product(Interval(0, 1), Interval(0, 2))
                        : Product(StandardSimplex(2), Interval(0, 1));
    }
  }();
  const Rational depths[] = {Frac(1, 4), Frac(1, 3), Frac(2, 5),
                             Frac(3, 10)};
  const int cuts = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < cuts; ++i) {
    const int v = static_cast<int>(rng() % p.vertices().size());
    p = TruncateVertex(p, v, depths[rng() % 4]);
  }
  return p;
}

}  // namespace polydecomp
