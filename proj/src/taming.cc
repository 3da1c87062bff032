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

#include "polydecomp/taming.h"

#include <algorithm>
#include <map>

#include "polydecomp/error.h"
#include "polydecomp/linalg.h"
#include "polydecomp/lp.h"

namespace polydecomp {
namespace {

void RequireLength(const SimplePolytope& p, const QVector& v) {
  if (static_cast<int>(v.size()) != p.dim()) {
    throw Error(ErrorCode::kInvalidArgument,
                "taming vector has " + std::to_string(v.size()) +
                    " coordinates, polytope dimension is " +
                    std::to_string(p.dim()));
  }
}

Rational SquaredDistance(std::span<const Rational> x,
                         std::span<const Rational> c) {
  const QVector d = Subtract(x, c);
  return Dot(d, d);
}

std::string ActiveString(const std::vector<int>& active) {
  std::string s = "{";
  for (size_t i = 0; i < active.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(active[i]);
  }
  return s + "}";
}

bool ProperSubset(const std::vector<int>& small, const std::vector<int>& big) {
  return small.size() < big.size() &&
         std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TamingSpec TamingSpec::Linear(QVector eta) {
  return {Kind::kLinear, std::move(eta)};
}
TamingSpec TamingSpec::NormSquare(QVector c) {
  return {Kind::kNormSquare, std::move(c)};
}
TamingSpec TamingSpec::NegNormSquare(QVector c) {
  return {Kind::kNegNormSquare, std::move(c)};
}

Rational TamingSpec::Evaluate(std::span<const Rational> x) const {
  switch (kind) {
    case Kind::kLinear:
      return Dot(vector, x);
    case Kind::kNormSquare:
      return SquaredDistance(x, vector);
    case Kind::kNegNormSquare:
      return -SquaredDistance(x, vector);
  }
  return 0;
}

const char* TamingKindName(TamingSpec::Kind kind) {
  switch (kind) {
    case TamingSpec::Kind::kLinear:
      return "linear";
    case TamingSpec::Kind::kNormSquare:
      return "normsq";
    case TamingSpec::Kind::kNegNormSquare:
      return "negnormsq";
  }
  return "unknown";
}

std::vector<LocalizingComponent> LocalizingSet(const SimplePolytope& p,
                                               const TamingSpec& spec) {
  RequireLength(p, spec.vector);
  std::vector<LocalizingComponent> out;
  if (spec.kind == TamingSpec::Kind::kLinear) {
    if (IsZero(spec.vector)) {
      throw Error(ErrorCode::kInvalidArgument, "eta must be nonzero");
    }
    for (int id = 0; id < static_cast<int>(p.faces().size()); ++id) {
      const Face& f = p.face(id);
      bool constant = true;
      for (const auto& d : NullSpace(p.ActiveNormals(f), p.dim())) {
        if (sgn(Dot(spec.vector, d)) != 0) {
          constant = false;
          break;
        }
      }
      if (!constant) continue;
      LocalizingComponent comp;
      comp.face_id = id;
      comp.critical_point = f.witness;
      comp.critical_value = spec.Evaluate(f.witness);
      comp.in_relint = true;
      comp.non_isolated = f.dim > 0;
      out.push_back(std::move(comp));
    }
    return out;
  }
  for (int id = 0; id < static_cast<int>(p.faces().size()); ++id) {
    const Face& f = p.face(id);
    LocalizingComponent comp;
    comp.face_id = id;
    comp.critical_point = AffineProjection(p, f, spec.vector);
    comp.critical_value = spec.Evaluate(comp.critical_point);
    comp.in_relint = RelintContains(p, f, comp.critical_point);
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<AssumptionCheck> CheckAssumption(const SimplePolytope& p,
                                             const QVector& c) {
  RequireLength(p, c);
  std::vector<AssumptionCheck> out;
  for (int id = 0; id < static_cast<int>(p.faces().size()); ++id) {
    const Face& f = p.face(id);
    AssumptionCheck check;
    check.face_id = id;
    check.projection = AffineProjection(p, f, c);
    check.pass = RelintContains(p, f, check.projection);
    out.push_back(std::move(check));
  }
  return out;
}

std::optional<AdmissibleCenter> FindAdmissibleCenter(const SimplePolytope& p) {
  const int n = p.dim();
  const auto& hs = p.halfspaces();
  // Variables (c_1..c_n, t). For a face F the projection of c onto aff F is
  // M_F c + p_F with M_F the orthogonal projector onto the direction space,
  // so <a_j, proj> = <M_F a_j, c> + <a_j, p_F>.
  LinearProgram lp;
  lp.num_vars = n + 1;
  lp.nonnegative.assign(n + 1, false);
  lp.objective.assign(n + 1, 0);
  lp.objective[n] = 1;
  const QVector origin(n);
  for (const Face& f : p.faces()) {
    if (f.dim == 0) continue;
    const Matrix normals = p.ActiveNormals(f);
    const QVector offset_point = AffineProjection(p, f, origin);
    for (int j = 0; j < static_cast<int>(hs.size()); ++j) {
      if (std::binary_search(f.active.begin(), f.active.end(), j)) continue;
      QVector row =
          Subtract(hs[j].normal, ProjectOntoRowSpace(normals, hs[j].normal));
      row.push_back(L1Norm(hs[j].normal));
      lp.constraints.push_back({std::move(row), Relation::kLessEqual,
                                hs[j].offset - Dot(hs[j].normal,
                                                   offset_point)});
    }
  }
  const Box box = BoundingBox(p, 2);
  for (int k = 0; k < n; ++k) {
    QVector e(n + 1);
    e[k] = 1;
    lp.constraints.push_back({e, Relation::kLessEqual, box.upper[k]});
    lp.constraints.push_back({e, Relation::kGreaterEqual, box.lower[k]});
  }
  const LpResult r = Maximize(lp);
  if (r.status != LpStatus::kOptimal || sgn(r.value) <= 0) return std::nullopt;
  AdmissibleCenter out;
  out.center.assign(r.solution.begin(), r.solution.begin() + n);
  out.margin = r.value;
  return out;
}

std::vector<QVector> DualEdgeFrame(const SimplePolytope& p, int face_id) {
  const Face& f = p.face(face_id);
  if (f.active.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "dual edge frame needs a proper face");
  }
  const Matrix normals = p.ActiveNormals(f);
  std::vector<QVector> out;
  for (size_t j = 0; j < normals.size(); ++j) {
    Matrix others;
    for (size_t i = 0; i < normals.size(); ++i) {
      if (i != j) others.push_back(normals[i]);
    }
    const QVector residual =
        Subtract(normals[j], ProjectOntoRowSpace(others, normals[j]));
    out.push_back(PrimitiveDirection(Scale(-1, residual)));
  }
  return out;
}

MorseData GenerateMorseData(const SimplePolytope& p) {
  MorseData data;
  for (const Face& f : p.faces()) {
    data.entries.push_back({f.active, f.witness, p.dim() - f.dim});
  }
  return data;
}

MorseData NormSquareMorseData(const SimplePolytope& p, const QVector& c) {
  RequireLength(p, c);
  MorseData data;
  for (const Face& f : p.faces()) {
    QVector x = AffineProjection(p, f, c);
    Rational alpha = SquaredDistance(x, c);
    data.entries.push_back({f.active, std::move(x), std::move(alpha)});
  }
  return data;
}

std::vector<MorseViolation> VerifyMorseData(const SimplePolytope& p,
                                            const MorseData& data) {
  using Kind = MorseViolation::Kind;
  std::vector<MorseViolation> out;
  std::map<std::vector<int>, const MorseEntry*> by_face;
  for (const auto& e : data.entries) {
    if (!p.FindFace(e.active)) {
      out.push_back({Kind::kUnknownFace, e.active, {},
                     ActiveString(e.active) + " is not a face"});
      continue;
    }
    by_face[e.active] = &e;
  }
  for (const Face& f : p.faces()) {
    auto it = by_face.find(f.active);
    if (it == by_face.end()) {
      out.push_back({Kind::kMissingFace, f.active, {},
                     "no entry for face " + ActiveString(f.active)});
      continue;
    }
    const MorseEntry& e = *it->second;
    if (static_cast<int>(e.point.size()) != p.dim() ||
        !RelintContains(p, f, e.point)) {
      out.push_back({Kind::kNotInRelint, f.active, {},
                     "point " + ToString(e.point) +
                         " is not in the relative interior of face " +
                         ActiveString(f.active)});
    }
  }
  for (const Face& f : p.faces()) {
    auto fit = by_face.find(f.active);
    if (fit == by_face.end()) continue;
    for (const Face& g : p.faces()) {
      if (!ProperSubset(f.active, g.active)) continue;
      auto git = by_face.find(g.active);
      if (git == by_face.end()) continue;
      if (!(fit->second->alpha < git->second->alpha)) {
        out.push_back({Kind::kOrder, f.active, g.active,
                       "alpha " + ToString(fit->second->alpha) + " of face " +
                           ActiveString(f.active) + " is not below alpha " +
                           ToString(git->second->alpha) + " of subface " +
                           ActiveString(g.active)});
      }
    }
  }
  return out;
}

Decomposition InducedDecomposition(const SimplePolytope& p,
                                   const TamingSpec& spec) {
  RequireLength(p, spec.vector);
  switch (spec.kind) {
    case TamingSpec::Kind::kLinear:
      return LawrenceVarchenko(p, spec.vector);
    case TamingSpec::Kind::kNormSquare:
      return Witten(p, spec.vector);
    case TamingSpec::Kind::kNegNormSquare: {
      Decomposition d = BrianchonGram(p);
      d.parameter = spec.vector;
      return d;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown taming kind");
}

}  // namespace polydecomp
