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

#include "polydecomp/decomposition.h"

#include <algorithm>
#include <string>

#include "polydecomp/error.h"
#include "polydecomp/linalg.h"
#include "polydecomp/lp.h"

namespace polydecomp {
namespace {

void RequireLength(const SimplePolytope& p, const QVector& v,
                   const char* what) {
  if (static_cast<int>(v.size()) != p.dim()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " has " + std::to_string(v.size()) +
                    " coordinates, polytope dimension is " +
                    std::to_string(p.dim()));
  }
}

std::string ActiveString(const std::vector<int>& active) {
  std::string s = "{";
  for (size_t i = 0; i < active.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(active[i]);
  }
  return s + "}";
}

// Supporting half-spaces of apex + span(lineality) + cone(rays), where the
// rays are independent modulo the lineality space and lineality.size() +
// rays.size() equals the ambient dimension.
std::vector<HalfSpace> ConeFromGenerators(const QVector& apex,
                                          const std::vector<QVector>& lineality,
                                          const std::vector<QVector>& rays) {
  const int n = static_cast<int>(apex.size());
  std::vector<HalfSpace> out;
  for (size_t k = 0; k < rays.size(); ++k) {
    Matrix rows = lineality;
    for (size_t j = 0; j < rays.size(); ++j) {
      if (j != k) rows.push_back(rays[j]);
    }
    QVector normal = NullSpace(rows, n).at(0);
    if (sgn(Dot(normal, rays[k])) > 0) normal = Scale(-1, normal);
    out.push_back(Canonicalize({normal, Dot(normal, apex)}));
  }
  return out;
}

}  // namespace

const char* DecompositionKindName(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::kBrianchonGram:
      return "bg";
    case DecompositionKind::kLawrenceVarchenko:
      return "lv";
    case DecompositionKind::kWitten:
      return "witten";
  }
  return "unknown";
}

TangentCone MakeTangentCone(const SimplePolytope& p, int face_id) {
  const Face& f = p.face(face_id);
  TangentCone cone;
  cone.face_id = face_id;
  for (int i : f.active) cone.halfspaces.push_back(p.halfspaces()[i]);
  cone.apex_witness = f.witness;
  return cone;
}

bool InTangentConeByDefinition(const SimplePolytope& p, int face_id,
                               const QVector& x) {
  // x - w = t (y - w) with y in P, t >= 0. Substituting u = t y gives the
  // linear system u - t w = x - w, <a_i, u> <= t b_i in (u, t).
  const int n = p.dim();
  const QVector& w = p.face(face_id).witness;
  LinearProgram lp;
  lp.num_vars = n + 1;
  lp.nonnegative.assign(n + 1, false);
  lp.nonnegative[n] = true;
  lp.objective.assign(n + 1, 0);
  for (int c = 0; c < n; ++c) {
    QVector row(n + 1);
    row[c] = 1;
    row[n] = -w[c];
    lp.constraints.push_back({row, Relation::kEqual, x[c] - w[c]});
  }
  for (const auto& h : p.halfspaces()) {
    QVector row = h.normal;
    row.push_back(-h.offset);
    lp.constraints.push_back({row, Relation::kLessEqual, 0});
  }
  return Maximize(lp).status == LpStatus::kOptimal;
}

EdgeFrame MakeEdgeFrame(const SimplePolytope& p, int vertex_id) {
  const Vertex& v = p.vertices().at(vertex_id);
  EdgeFrame frame;
  frame.vertex_id = vertex_id;
  frame.active = v.active;
  for (size_t k = 0; k < v.active.size(); ++k) {
    Matrix rows;
    for (size_t i = 0; i < v.active.size(); ++i) {
      if (i != k) rows.push_back(p.halfspaces()[v.active[i]].normal);
    }
    QVector g = NullSpace(rows, p.dim()).at(0);
    if (sgn(Dot(p.halfspaces()[v.active[k]].normal, g)) > 0) g = Scale(-1, g);
    frame.generators.push_back(PrimitiveDirection(g));
  }
  return frame;
}

Decomposition BrianchonGram(const SimplePolytope& p) {
  Decomposition d;
  d.dim = p.dim();
  d.polytope = p.halfspaces();
  d.kind = DecompositionKind::kBrianchonGram;
  for (int id = 0; id < static_cast<int>(p.faces().size()); ++id) {
    const Face& f = p.face(id);
    SignedCell cell;
    cell.halfspaces = MakeTangentCone(p, id).halfspaces;
    cell.flip_count = f.dim;
    cell.sign = f.dim % 2 == 0 ? 1 : -1;
    cell.provenance = {Provenance::Kind::kFace, id, f.active};
    d.cells.push_back(std::move(cell));
  }
  return d;
}

Decomposition LawrenceVarchenko(const SimplePolytope& p, const QVector& eta) {
  RequireLength(p, eta, "polarizing vector");
  const int n = p.dim();
  Decomposition d;
  d.dim = n;
  d.polytope = p.halfspaces();
  d.kind = DecompositionKind::kLawrenceVarchenko;
  d.parameter = eta;
  for (int q = 0; q < static_cast<int>(p.vertices().size()); ++q) {
    const EdgeFrame frame = MakeEdgeFrame(p, q);
    SignedCell cell;
    Matrix columns(n, QVector(n));
    for (int k = 0; k < n; ++k) {
      const int pairing = sgn(Dot(eta, frame.generators[k]));
      if (pairing == 0) {
        throw Error(ErrorCode::kGenericityFailure,
                    "eta is orthogonal to edge " +
                        ToString(frame.generators[k]) + " at vertex " +
                        ToString(p.vertices()[q].point),
                    {q, k});
      }
      const bool flip = pairing < 0;
      cell.flips.push_back(flip);
      if (flip) ++cell.flip_count;
      for (int r = 0; r < n; ++r) {
        columns[r][k] = flip ? -frame.generators[k][r] : frame.generators[k][r];
      }
    }
    // x = q + G t with t >= 0  <=>  G^{-1} (x - q) >= 0.
    const Matrix inv = *Inverse(columns);
    const QVector& apex = p.vertices()[q].point;
    for (int k = 0; k < n; ++k) {
      const QVector normal = Scale(-1, inv[k]);
      cell.halfspaces.push_back(Canonicalize({normal, Dot(normal, apex)}));
    }
    cell.sign = cell.flip_count % 2 == 0 ? 1 : -1;
    cell.provenance = {Provenance::Kind::kVertex, q, p.vertices()[q].active};
    d.cells.push_back(std::move(cell));
  }
  return d;
}

SignedCell WittenCell(const SimplePolytope& p, int face_id, int vertex_id,
                      const QVector& c) {
  const Face& f = p.face(face_id);
  if (!std::binary_search(f.vertex_ids.begin(), f.vertex_ids.end(),
                          vertex_id)) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(vertex_id) + " is not on face " +
                    std::to_string(face_id));
  }
  const QVector x_f = AffineProjection(p, f, c);
  const QVector gradient = Scale(2, Subtract(x_f, c));
  const EdgeFrame frame = MakeEdgeFrame(p, vertex_id);
  const Matrix normals = p.ActiveNormals(f);

  std::vector<QVector> lineality;
  std::vector<QVector> rays;
  SignedCell cell;
  for (size_t k = 0; k < frame.active.size(); ++k) {
    const bool leaves_face = std::binary_search(
        f.active.begin(), f.active.end(), frame.active[k]);
    if (!leaves_face) lineality.push_back(frame.generators[k]);
  }
  // Normal generators in the order of f.active.
  for (int facet : f.active) {
    const auto it =
        std::find(frame.active.begin(), frame.active.end(), facet);
    const QVector& g = frame.generators[it - frame.active.begin()];
    const QVector reduced = ProjectOntoRowSpace(normals, g);
    const int pairing = sgn(Dot(gradient, reduced));
    if (pairing == 0) {
      throw Error(ErrorCode::kDegeneratePairing,
                  "gradient " + ToString(gradient) + " is orthogonal to the " +
                      "normal generator " + ToString(reduced) + " of face " +
                      ActiveString(f.active),
                  {face_id, facet});
    }
    const bool flip = pairing < 0;
    cell.flips.push_back(flip);
    if (flip) ++cell.flip_count;
    rays.push_back(flip ? Scale(-1, reduced) : reduced);
  }
  cell.halfspaces = ConeFromGenerators(x_f, lineality, rays);
  cell.sign = cell.flip_count % 2 == 0 ? 1 : -1;
  cell.provenance = {Provenance::Kind::kFace, face_id, f.active};
  return cell;
}

Decomposition Witten(const SimplePolytope& p, const QVector& c) {
  RequireLength(p, c, "center");
  std::vector<int> failing;
  std::string names;
  for (int id = 0; id < static_cast<int>(p.faces().size()); ++id) {
    const Face& f = p.face(id);
    if (!RelintContains(p, f, AffineProjection(p, f, c))) {
      failing.push_back(id);
      if (!names.empty()) names += " ";
      names += ActiveString(f.active);
    }
  }
  if (!failing.empty()) {
    throw Error(ErrorCode::kAssumptionViolated,
                "closest point of c = " + ToString(c) +
                    " is outside the relative interior of faces " + names,
                failing);
  }
  Decomposition d;
  d.dim = p.dim();
  d.polytope = p.halfspaces();
  d.kind = DecompositionKind::kWitten;
  d.parameter = c;
  for (int id = 0; id < static_cast<int>(p.faces().size()); ++id) {
    d.cells.push_back(WittenCell(p, id, p.face(id).vertex_ids.front(), c));
  }
  return d;
}

int IndicatorSum(const Decomposition& d, std::span<const Rational> x) {
  int sum = 0;
  for (const auto& cell : d.cells) {
    if (Satisfies(cell.halfspaces, x)) sum += cell.sign;
  }
  return sum;
}

}  // namespace polydecomp
