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

#include "polydecomp/clip.h"

#include <algorithm>
#include <iterator>
#include <set>

#include "polydecomp/linalg.h"

namespace polydecomp {
namespace {

std::vector<HalfSpace> BoxHalfSpaces(const Box& box) {
  const int n = box.dim();
  std::vector<HalfSpace> out;
  out.reserve(2 * n);
  for (int k = 0; k < n; ++k) {
    QVector e(n);
    e[k] = -1;
    out.push_back({e, -box.lower[k]});
    e[k] = 1;
    out.push_back({e, box.upper[k]});
  }
  return out;
}

bool IsSubset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Combinatorial adjacency test of the double description method: u and w
// span an edge iff no third vertex is tight on every constraint they share.
bool Adjacent(const ClippedPolytope& q, int u, int w) {
  std::vector<int> common;
  std::set_intersection(q.incidence[u].begin(), q.incidence[u].end(),
                        q.incidence[w].begin(), q.incidence[w].end(),
                        std::back_inserter(common));
  if (static_cast<int>(common.size()) < q.dim - 1) return false;
  for (int z = 0; z < static_cast<int>(q.vertices.size()); ++z) {
    if (z != u && z != w && IsSubset(common, q.incidence[z])) return false;
  }
  return true;
}

void Fan(const ClippedPolytope& q, const std::vector<int>& face, int k,
         std::vector<int>& apexes, Rational& total) {
  if (k == 0) {
    std::vector<QVector> simplex;
    simplex.reserve(apexes.size() + 1);
    for (int a : apexes) simplex.push_back(q.vertices[a]);
    simplex.push_back(q.vertices[face[0]]);
    total += SimplexVolume(simplex);
    return;
  }
  const int base = face[0];
  std::set<std::vector<int>> facets;
  for (int j = 0; j < static_cast<int>(q.halfspaces.size()); ++j) {
    std::vector<int> sub;
    for (int v : face) {
      if (std::binary_search(q.incidence[v].begin(), q.incidence[v].end(), j)) {
        sub.push_back(v);
      }
    }
    if (sub.size() == face.size() || static_cast<int>(sub.size()) < k) continue;
    if (sub[0] == base || facets.count(sub)) continue;
    std::vector<QVector> pts;
    pts.reserve(sub.size());
    for (int v : sub) pts.push_back(q.vertices[v]);
    if (AffineDimension(pts) == k - 1) facets.insert(std::move(sub));
  }
  apexes.push_back(base);
  for (const auto& facet : facets) Fan(q, facet, k - 1, apexes, total);
  apexes.pop_back();
}

}  // namespace

ClippedPolytope Clip(std::span<const HalfSpace> halfspaces, const Box& box) {
  const int n = box.dim();
  ClippedPolytope q;
  q.dim = n;
  q.halfspaces = BoxHalfSpaces(box);
  q.halfspaces.insert(q.halfspaces.end(), halfspaces.begin(), halfspaces.end());

  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    QVector corner(n);
    std::vector<int> tight;
    for (int k = 0; k < n; ++k) {
      const bool up = mask & (1u << k);
      corner[k] = up ? box.upper[k] : box.lower[k];
      tight.push_back(2 * k + (up ? 1 : 0));
    }
    q.vertices.push_back(std::move(corner));
    q.incidence.push_back(std::move(tight));
  }

  bool degenerate = false;
  for (int j = 2 * n; j < static_cast<int>(q.halfspaces.size()); ++j) {
    const HalfSpace& h = q.halfspaces[j];
    const int count = static_cast<int>(q.vertices.size());
    std::vector<Rational> excess(count);
    std::vector<int> inside, outside;
    bool any_strict = false;
    for (int v = 0; v < count; ++v) {
      excess[v] = Excess(h, q.vertices[v]);
      const int s = sgn(excess[v]);
      if (s > 0) {
        outside.push_back(v);
      } else {
        inside.push_back(v);
        if (s < 0) any_strict = true;
      }
    }
    if (inside.empty()) {
      q.vertices.clear();
      q.incidence.clear();
      q.empty = true;
      return q;
    }
    if (!any_strict) degenerate = true;

    ClippedPolytope next;
    next.dim = n;
    for (int v : inside) {
      next.vertices.push_back(q.vertices[v]);
      auto tight = q.incidence[v];
      if (sgn(excess[v]) == 0) tight.push_back(j);
      next.incidence.push_back(std::move(tight));
    }
    for (int u : inside) {
      if (sgn(excess[u]) == 0) continue;
      for (int w : outside) {
        if (!Adjacent(q, u, w)) continue;
        const Rational t = excess[u] / (excess[u] - excess[w]);
        QVector p(n);
        for (int c = 0; c < n; ++c) {
          p[c] = q.vertices[u][c] + t * (q.vertices[w][c] - q.vertices[u][c]);
        }
        std::vector<int> tight;
        std::set_intersection(q.incidence[u].begin(), q.incidence[u].end(),
                              q.incidence[w].begin(), q.incidence[w].end(),
                              std::back_inserter(tight));
        tight.push_back(j);
        next.vertices.push_back(std::move(p));
        next.incidence.push_back(std::move(tight));
      }
    }
    q.vertices = std::move(next.vertices);
    q.incidence = std::move(next.incidence);
    if (degenerate) break;
  }

  if (degenerate) {
    // Lower-dimensional: the adjacency test above assumes a full-dimensional
    // polytope, so recompute the vertex set directly.
    auto verts =
        EnumerateVertices(q.halfspaces, n, VertexCheck::kAllowDegenerate);
    q.vertices.clear();
    q.incidence.clear();
    for (auto& v : verts) {
      q.vertices.push_back(std::move(v.point));
      q.incidence.push_back(std::move(v.active));
    }
    q.empty = q.vertices.empty();
    q.full_dimensional = false;
    return q;
  }
  q.full_dimensional = true;
  return q;
}

Rational SimplexVolume(const std::vector<QVector>& vertices) {
  const int n = static_cast<int>(vertices.size()) - 1;
  Matrix m(n);
  for (int i = 0; i < n; ++i) m[i] = Subtract(vertices[i + 1], vertices[0]);
  Rational det = abs(Determinant(std::move(m)));
  for (int i = 2; i <= n; ++i) det /= i;
  return det;
}

Rational ExactVolume(const ClippedPolytope& q) {
  if (q.empty || !q.full_dimensional || q.vertices.empty()) return 0;
  std::vector<int> all(q.vertices.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<int> apexes;
  Rational total = 0;
  Fan(q, all, q.dim, apexes, total);
  return total;
}

}  // namespace polydecomp
