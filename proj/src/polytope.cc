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

#include "polydecomp/polytope.h"

#include <algorithm>
#include <set>
#include <string>

#include "polydecomp/error.h"
#include "polydecomp/linalg.h"
#include "polydecomp/lp.h"

namespace polydecomp {
namespace {

std::string IndexList(const std::vector<int>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

// Advances `combo` (strictly increasing indices into [0, n)) to the next
// k-combination in lexicographic order.
bool NextCombination(std::vector<int>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  int i = k - 1;
  while (i >= 0 && combo[i] == n - k + i) --i;
  if (i < 0) return false;
  ++combo[i];
  for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

void CheckBounded(int dim, const std::vector<HalfSpace>& hs) {
  if (static_cast<int>(hs.size()) < dim + 1) {
    throw Error(ErrorCode::kUnbounded,
                "a bounded polytope in dimension " + std::to_string(dim) +
                    " needs at least " + std::to_string(dim + 1) +
                    " half-spaces");
  }
  // The recession cone {d : A d <= 0} must be {0}: maximize +-d_k over its
  // intersection with the unit cube.
  for (int k = 0; k < dim; ++k) {
    for (int s : {1, -1}) {
      LinearProgram lp;
      lp.num_vars = dim;
      lp.nonnegative.assign(dim, false);
      lp.objective.assign(dim, 0);
      lp.objective[k] = s;
      for (const auto& h : hs) {
        lp.constraints.push_back({h.normal, Relation::kLessEqual, 0});
      }
      for (int j = 0; j < dim; ++j) {
        QVector e(dim);
        e[j] = 1;
        lp.constraints.push_back({e, Relation::kLessEqual, 1});
        lp.constraints.push_back({e, Relation::kGreaterEqual, -1});
      }
      const LpResult r = Maximize(lp);
      if (r.status == LpStatus::kOptimal && sgn(r.value) > 0) {
        QVector dir = r.solution;
        throw Error(ErrorCode::kUnbounded,
                    "recession direction " + ToString(PrimitiveDirection(dir)));
      }
    }
  }
}

void CheckFullDimensional(int dim, const std::vector<HalfSpace>& hs) {
  // maximize t  s.t.  <a_i, x> + t <= b_i,  t <= 1.
  LinearProgram lp;
  lp.num_vars = dim + 1;
  lp.nonnegative.assign(dim + 1, false);
  lp.objective.assign(dim + 1, 0);
  lp.objective[dim] = 1;
  for (const auto& h : hs) {
    QVector row = h.normal;
    row.push_back(1);
    lp.constraints.push_back({row, Relation::kLessEqual, h.offset});
  }
  QVector cap(dim + 1);
  cap[dim] = 1;
  lp.constraints.push_back({cap, Relation::kLessEqual, 1});
  const LpResult r = Maximize(lp);
  if (r.status != LpStatus::kOptimal || sgn(r.value) <= 0) {
    throw Error(ErrorCode::kNotFullDimensional,
                "no point satisfies every inequality strictly");
  }
}

}  // namespace

Rational Box::Volume() const {
  Rational v = 1;
  for (size_t i = 0; i < lower.size(); ++i) v *= upper[i] - lower[i];
  return v;
}

HalfSpace Canonicalize(const HalfSpace& h) {
  if (IsZero(h.normal)) {
    throw Error(ErrorCode::kMalformedInput, "half-space with zero normal");
  }
  Rational factor;
  QVector normal = PrimitiveDirection(h.normal, &factor);
  return {std::move(normal), factor * h.offset};
}

Rational Excess(const HalfSpace& h, std::span<const Rational> x) {
  return Dot(h.normal, x) - h.offset;
}

bool Satisfies(std::span<const HalfSpace> halfspaces,
               std::span<const Rational> x) {
  for (const auto& h : halfspaces) {
    if (sgn(Excess(h, x)) > 0) return false;
  }
  return true;
}

std::vector<Vertex> EnumerateVertices(std::span<const HalfSpace> halfspaces,
                                      int dim, VertexCheck check) {
  const int n_half = static_cast<int>(halfspaces.size());
  std::map<QVector, int> seen;
  std::vector<Vertex> out;
  if (n_half < dim) return out;
  std::vector<int> combo(dim);
  for (int i = 0; i < dim; ++i) combo[i] = i;
  Matrix a(dim);
  QVector b(dim);
  do {
    for (int i = 0; i < dim; ++i) {
      a[i] = halfspaces[combo[i]].normal;
      b[i] = halfspaces[combo[i]].offset;
    }
    auto x = SolveSquare(a, b);
    if (!x || !Satisfies(halfspaces, *x) || seen.count(*x)) continue;
    Vertex v;
    v.point = std::move(*x);
    for (int i = 0; i < n_half; ++i) {
      if (sgn(Excess(halfspaces[i], v.point)) == 0) v.active.push_back(i);
    }
    seen.emplace(v.point, static_cast<int>(out.size()));
    out.push_back(std::move(v));
  } while (NextCombination(combo, n_half));

  std::sort(out.begin(), out.end(), [](const Vertex& l, const Vertex& r) {
    return l.active < r.active;
  });
  if (check == VertexCheck::kRequireSimple) {
    for (size_t id = 0; id < out.size(); ++id) {
      if (static_cast<int>(out[id].active.size()) > dim) {
        throw Error(ErrorCode::kNotSimple,
                    "vertex " + ToString(out[id].point) + " lies on " +
                        std::to_string(out[id].active.size()) + " facets " +
                        IndexList(out[id].active),
                    {static_cast<int>(id)});
      }
    }
  }
  return out;
}

std::vector<Face> EnumerateFaces(int dim, const std::vector<Vertex>& vertices) {
  std::set<std::vector<int>> active_sets;
  for (const auto& v : vertices) {
    const int k = static_cast<int>(v.active.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < k; ++i) {
        if (mask & (1u << i)) subset.push_back(v.active[i]);
      }
      active_sets.insert(std::move(subset));
    }
  }
  std::vector<std::vector<int>> ordered(active_sets.begin(),
                                        active_sets.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& l, const auto& r) {
                     return l.size() < r.size();
                   });
  std::vector<Face> faces;
  faces.reserve(ordered.size());
  for (auto& active : ordered) {
    Face f;
    f.dim = dim - static_cast<int>(active.size());
    f.witness.assign(dim, 0);
    for (size_t id = 0; id < vertices.size(); ++id) {
      if (std::includes(vertices[id].active.begin(), vertices[id].active.end(),
                        active.begin(), active.end())) {
        f.vertex_ids.push_back(static_cast<int>(id));
        for (int c = 0; c < dim; ++c) f.witness[c] += vertices[id].point[c];
      }
    }
    const Rational count(static_cast<long>(f.vertex_ids.size()));
    for (auto& x : f.witness) x /= count;
    f.active = std::move(active);
    faces.push_back(std::move(f));
  }
  return faces;
}

SimplePolytope SimplePolytope::FromHalfSpaces(
    int dim, std::vector<HalfSpace> halfspaces) {
  if (dim < 1) {
    throw Error(ErrorCode::kMalformedInput, "dimension must be positive");
  }
  for (size_t i = 0; i < halfspaces.size(); ++i) {
    if (static_cast<int>(halfspaces[i].normal.size()) != dim) {
      throw Error(ErrorCode::kMalformedInput,
                  "half-space " + std::to_string(i) + " has " +
                      std::to_string(halfspaces[i].normal.size()) +
                      " coefficients, expected " + std::to_string(dim),
                  {static_cast<int>(i)});
    }
    halfspaces[i] = Canonicalize(halfspaces[i]);
  }
  CheckBounded(dim, halfspaces);
  CheckFullDimensional(dim, halfspaces);

  for (size_t i = 0; i < halfspaces.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (halfspaces[i] == halfspaces[j]) {
        throw Error(ErrorCode::kRedundantHalfSpace,
                    "half-space " + std::to_string(i) + " duplicates " +
                        std::to_string(j),
                    {static_cast<int>(i)});
      }
    }
  }

  auto vertices =
      EnumerateVertices(halfspaces, dim, VertexCheck::kAllowDegenerate);
  for (size_t i = 0; i < halfspaces.size(); ++i) {
    std::vector<QVector> tight;
    for (const auto& v : vertices) {
      if (std::binary_search(v.active.begin(), v.active.end(),
                             static_cast<int>(i))) {
        tight.push_back(v.point);
      }
    }
    if (AffineDimension(tight) != dim - 1) {
      throw Error(ErrorCode::kRedundantHalfSpace,
                  "half-space " + std::to_string(i) + " does not support a facet",
                  {static_cast<int>(i)});
    }
  }
  for (size_t id = 0; id < vertices.size(); ++id) {
    if (static_cast<int>(vertices[id].active.size()) > dim) {
      throw Error(ErrorCode::kNotSimple,
                  "vertex " + ToString(vertices[id].point) + " lies on " +
                      std::to_string(vertices[id].active.size()) +
                      " facets " + IndexList(vertices[id].active),
                  {static_cast<int>(id)});
    }
  }

  SimplePolytope p;
  p.dim_ = dim;
  p.halfspaces_ = std::move(halfspaces);
  p.vertices_ = std::move(vertices);
  p.faces_ = EnumerateFaces(dim, p.vertices_);
  for (size_t id = 0; id < p.faces_.size(); ++id) {
    p.face_index_.emplace(p.faces_[id].active, static_cast<int>(id));
  }
  return p;
}

std::optional<int> SimplePolytope::FindFace(
    const std::vector<int>& active) const {
  auto it = face_index_.find(active);
  if (it == face_index_.end()) return std::nullopt;
  return it->second;
}

int SimplePolytope::VertexFace(int vertex_id) const {
  return face_index_.at(vertices_.at(vertex_id).active);
}

bool SimplePolytope::Contains(std::span<const Rational> x) const {
  return Satisfies(halfspaces_, x);
}

std::vector<QVector> SimplePolytope::ActiveNormals(const Face& f) const {
  std::vector<QVector> rows;
  rows.reserve(f.active.size());
  for (int i : f.active) rows.push_back(halfspaces_[i].normal);
  return rows;
}

bool RelintContains(const SimplePolytope& p, const Face& f,
                    std::span<const Rational> x) {
  const auto& hs = p.halfspaces();
  size_t next_active = 0;
  for (int i = 0; i < static_cast<int>(hs.size()); ++i) {
    const int s = sgn(Excess(hs[i], x));
    const bool is_active =
        next_active < f.active.size() && f.active[next_active] == i;
    if (is_active) {
      ++next_active;
      if (s != 0) return false;
    } else if (s >= 0) {
      return false;
    }
  }
  return true;
}

QVector AffineProjection(const SimplePolytope& p, const Face& f,
                         const QVector& c) {
  // x = c - A^T (A A^T)^{-1} (A c - b); A^T (A A^T)^{-1} A is the projector
  // onto the row space of A.
  const auto rows = p.ActiveNormals(f);
  if (rows.empty()) return c;
  const int k = static_cast<int>(rows.size());
  Matrix gram(k, QVector(k));
  QVector residual(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) gram[i][j] = Dot(rows[i], rows[j]);
    residual[i] = Dot(rows[i], c) - p.halfspaces()[f.active[i]].offset;
  }
  const auto y = SolveSquare(gram, residual);
  QVector x = c;
  for (int i = 0; i < k; ++i) {
    for (size_t col = 0; col < c.size(); ++col) x[col] -= (*y)[i] * rows[i][col];
  }
  return x;
}

Box BoundingBox(const SimplePolytope& p, const Rational& inflate) {
  if (inflate < 1) {
    throw Error(ErrorCode::kInvalidArgument, "inflate factor must be >= 1");
  }
  const int n = p.dim();
  Box box{p.vertices()[0].point, p.vertices()[0].point};
  for (const auto& v : p.vertices()) {
    for (int i = 0; i < n; ++i) {
      if (v.point[i] < box.lower[i]) box.lower[i] = v.point[i];
      if (v.point[i] > box.upper[i]) box.upper[i] = v.point[i];
    }
  }
  for (int i = 0; i < n; ++i) {
    const Rational center = (box.lower[i] + box.upper[i]) / 2;
    const Rational half = inflate * (box.upper[i] - box.lower[i]) / 2;
    box.lower[i] = center - half;
    box.upper[i] = center + half;
  }
  return box;
}

}  // namespace polydecomp
