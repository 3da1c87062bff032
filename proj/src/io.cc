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

#include "polydecomp/io.h"

#include <map>

#include "polydecomp/error.h"

namespace polydecomp {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Malformed(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int IntFromJson(const Json& j, const char* what) {
  if (!j.is_number_integer()) Malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> IndicesFromJson(const Json& j) {
  if (!j.is_array()) Malformed("index list must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(IntFromJson(x, "index"));
  return out;
}

Json BoxToJson(const Box& b) {
  return Json{{"lower", VectorToJson(b.lower)},
              {"upper", VectorToJson(b.upper)}};
}

const char* ReportKindName(VerificationReport::Kind kind) {
  return kind == VerificationReport::Kind::kPointwise ? "pointwise"
                                                      : "measure";
}

const char* MorseViolationName(MorseViolation::Kind kind) {
  switch (kind) {
    case MorseViolation::Kind::kMissingFace:
      return "missing_face";
    case MorseViolation::Kind::kUnknownFace:
      return "unknown_face";
    case MorseViolation::Kind::kNotInRelint:
      return "not_in_relint";
    case MorseViolation::Kind::kOrder:
      return "order";
  }
  return "unknown";
}

}  // namespace

Json RationalToJson(const Rational& r) { return ToString(r); }

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) {
    return ParseRational(j.dump());
  }
  throw Error(ErrorCode::kMalformedRational,
              "expected an integer or a \"p/q\" string, got " + j.dump());
}

Json VectorToJson(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(RationalToJson(x));
  return out;
}

QVector VectorFromJson(const Json& j) {
  if (!j.is_array()) Malformed("expected an array of rationals");
  QVector out;
  for (const auto& x : j) out.push_back(RationalFromJson(x));
  return out;
}

Json HalfSpaceToJson(const HalfSpace& h) {
  return Json{{"a", VectorToJson(h.normal)}, {"b", RationalToJson(h.offset)}};
}

HalfSpace HalfSpaceFromJson(const Json& j) {
  return {VectorFromJson(Field(j, "a")), RationalFromJson(Field(j, "b"))};
}

Json PolytopeToJson(const SimplePolytope& p) {
  Json hs = Json::array();
  for (const auto& h : p.halfspaces()) hs.push_back(HalfSpaceToJson(h));
  return Json{{"dim", p.dim()}, {"halfspaces", hs}};
}

SimplePolytope PolytopeFromJson(const Json& j) {
  const int dim = IntFromJson(Field(j, "dim"), "dim");
  const Json& list = Field(j, "halfspaces");
  if (!list.is_array()) Malformed("\"halfspaces\" must be an array");
  std::vector<HalfSpace> hs;
  for (const auto& h : list) hs.push_back(HalfSpaceFromJson(h));
  return SimplePolytope::FromHalfSpaces(dim, std::move(hs));
}

SimplePolytope ParsePolytope(std::string_view text) {
  return PolytopeFromJson(ParseJson(text));
}

Json FaceLatticeToJson(const SimplePolytope& p) {
  Json vertices = Json::array();
  for (size_t id = 0; id < p.vertices().size(); ++id) {
    const auto& v = p.vertices()[id];
    vertices.push_back(Json{{"id", id},
                            {"point", VectorToJson(v.point)},
                            {"active", v.active}});
  }
  std::map<int, int> by_dim;
  Json faces = Json::array();
  for (size_t id = 0; id < p.faces().size(); ++id) {
    const Face& f = p.faces()[id];
    ++by_dim[f.dim];
    faces.push_back(Json{{"id", id},
                         {"dim", f.dim},
                         {"active", f.active},
                         {"vertices", f.vertex_ids},
                         {"witness", VectorToJson(f.witness)}});
  }
  Json counts = Json::object();
  for (auto it = by_dim.rbegin(); it != by_dim.rend(); ++it) {
    counts[std::to_string(it->first)] = it->second;
  }
  return Json{{"dim", p.dim()},
              {"faceCount", p.faces().size()},
              {"facesByDim", counts},
              {"vertices", vertices},
              {"faces", faces}};
}

Json DecompositionToJson(const Decomposition& d) {
  Json polytope = Json::array();
  for (const auto& h : d.polytope) polytope.push_back(HalfSpaceToJson(h));
  Json out{{"kind", DecompositionKindName(d.kind)}, {"dim", d.dim}};
  if (d.kind == DecompositionKind::kLawrenceVarchenko) {
    out["eta"] = VectorToJson(d.parameter);
  } else if (!d.parameter.empty()) {
    out["center"] = VectorToJson(d.parameter);
  }
  out["polytope"] = Json{{"dim", d.dim}, {"halfspaces", polytope}};
  Json cells = Json::array();
  for (const auto& c : d.cells) {
    Json hs = Json::array();
    for (const auto& h : c.halfspaces) hs.push_back(HalfSpaceToJson(h));
    Json flips = Json::array();
    for (bool f : c.flips) flips.push_back(f);
    cells.push_back(Json{
        {"provenance",
         Json{{"kind", c.provenance.kind == Provenance::Kind::kFace
                           ? "face"
                           : "vertex"},
              {"id", c.provenance.id},
              {"active", c.provenance.active}}},
        {"sign", c.sign},
        {"flipCount", c.flip_count},
        {"flips", flips},
        {"halfspaces", hs}});
  }
  out["cells"] = cells;
  return out;
}

Decomposition DecompositionFromJson(const Json& j) {
  Decomposition d;
  const std::string kind = Field(j, "kind").get<std::string>();
  if (kind == "bg") {
    d.kind = DecompositionKind::kBrianchonGram;
  } else if (kind == "lv") {
    d.kind = DecompositionKind::kLawrenceVarchenko;
  } else if (kind == "witten") {
    d.kind = DecompositionKind::kWitten;
  } else {
    Malformed("unknown decomposition kind \"" + kind + "\"");
  }
  d.dim = IntFromJson(Field(j, "dim"), "dim");
  if (j.contains("eta")) d.parameter = VectorFromJson(j.at("eta"));
  if (j.contains("center")) d.parameter = VectorFromJson(j.at("center"));
  for (const auto& h : Field(Field(j, "polytope"), "halfspaces")) {
    d.polytope.push_back(HalfSpaceFromJson(h));
  }
  const Json& cells = Field(j, "cells");
  if (!cells.is_array()) Malformed("\"cells\" must be an array");
  for (const auto& c : cells) {
    SignedCell cell;
    const Json& prov = Field(c, "provenance");
    const std::string pkind = Field(prov, "kind").get<std::string>();
    if (pkind != "face" && pkind != "vertex") {
      Malformed("unknown provenance kind \"" + pkind + "\"");
    }
    cell.provenance.kind = pkind == "face" ? Provenance::Kind::kFace
                                           : Provenance::Kind::kVertex;
    cell.provenance.id = IntFromJson(Field(prov, "id"), "provenance id");
    cell.provenance.active = IndicesFromJson(Field(prov, "active"));
    cell.sign = IntFromJson(Field(c, "sign"), "sign");
    if (cell.sign != 1 && cell.sign != -1) Malformed("sign must be +1 or -1");
    cell.flip_count = IntFromJson(Field(c, "flipCount"), "flipCount");
    if (c.contains("flips")) {
      for (const auto& f : c.at("flips")) {
        if (!f.is_boolean()) Malformed("flips must be booleans");
        cell.flips.push_back(f.get<bool>());
      }
    }
    for (const auto& h : Field(c, "halfspaces")) {
      HalfSpace hs = HalfSpaceFromJson(h);
      if (static_cast<int>(hs.normal.size()) != d.dim) {
        Malformed("cell half-space dimension mismatch");
      }
      cell.halfspaces.push_back(std::move(hs));
    }
    d.cells.push_back(std::move(cell));
  }
  return d;
}

Json ReportToJson(const VerificationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json entry = Json::object();
    if (f.box) {
      entry["box"] = BoxToJson(*f.box);
    } else {
      entry["point"] = VectorToJson(f.point);
    }
    entry["expected"] = RationalToJson(f.expected);
    entry["got"] = RationalToJson(f.got);
    failures.push_back(std::move(entry));
  }
  Json out{{"kind", ReportKindName(r.kind)},
           {"seed", r.seed},
           {"samples", r.samples}};
  if (r.kind == VerificationReport::Kind::kPointwise) {
    out["avoidFacetSpans"] = r.avoid_facet_spans;
  }
  out["pass"] = r.pass();
  out["failureCount"] = r.failures.size();
  out["failures"] = failures;
  return out;
}

Json LocalizingSetToJson(const SimplePolytope& p, const TamingSpec& spec,
                         const std::vector<LocalizingComponent>& components) {
  Json rows = Json::array();
  Json warnings = Json::array();
  for (const auto& c : components) {
    const Face& f = p.face(c.face_id);
    rows.push_back(Json{{"faceId", c.face_id},
                        {"active", f.active},
                        {"dim", f.dim},
                        {"criticalPoint", VectorToJson(c.critical_point)},
                        {"criticalValue", RationalToJson(c.critical_value)},
                        {"inRelint", c.in_relint},
                        {"nonIsolated", c.non_isolated}});
    if (c.non_isolated) {
      warnings.push_back("NonIsolated: rho is constant on face " +
                         std::to_string(c.face_id) + " of dimension " +
                         std::to_string(f.dim));
    } else if (!c.in_relint) {
      warnings.push_back("critical point of face " +
                         std::to_string(c.face_id) +
                         " lies outside its relative interior");
    }
  }
  return Json{{"rho", TamingKindName(spec.kind)},
              {"vector", VectorToJson(spec.vector)},
              {"components", rows},
              {"warnings", warnings}};
}

Json AssumptionToJson(const SimplePolytope& p,
                      const std::vector<AssumptionCheck>& checks) {
  Json rows = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    rows.push_back(Json{{"faceId", c.face_id},
                        {"active", p.face(c.face_id).active},
                        {"pass", c.pass},
                        {"projection", VectorToJson(c.projection)}});
  }
  return Json{{"pass", all}, {"faces", rows}};
}

Json AdmissibleCenterToJson(const SimplePolytope& p,
                            const std::optional<AdmissibleCenter>& center) {
  const Box box = BoundingBox(p, 2);
  Json out{{"found", center.has_value()}};
  if (center) {
    out["center"] = VectorToJson(center->center);
    out["margin"] = RationalToJson(center->margin);
    out["assumption"] = AssumptionToJson(p, CheckAssumption(p, center->center));
  }
  out["searchBox"] = BoxToJson(box);
  out["note"] =
      "the search is confined to the vertex bounding box inflated by 2; "
      "found=false means no admissible center inside that box";
  return out;
}

Json MorseDataToJson(const MorseData& data) {
  Json entries = Json::array();
  for (const auto& e : data.entries) {
    entries.push_back(Json{{"active", e.active},
                           {"point", VectorToJson(e.point)},
                           {"alpha", RationalToJson(e.alpha)}});
  }
  return Json{{"entries", entries}};
}

MorseData MorseDataFromJson(const Json& j) {
  MorseData data;
  const Json& entries = Field(j, "entries");
  if (!entries.is_array()) Malformed("\"entries\" must be an array");
  for (const auto& e : entries) {
    data.entries.push_back({IndicesFromJson(Field(e, "active")),
                            VectorFromJson(Field(e, "point")),
                            RationalFromJson(Field(e, "alpha"))});
  }
  return data;
}

Json MorseViolationsToJson(const std::vector<MorseViolation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    Json entry{{"kind", MorseViolationName(v.kind)}, {"face", v.face}};
    if (v.kind == MorseViolation::Kind::kOrder) entry["subface"] = v.subface;
    entry["message"] = v.message;
    out.push_back(std::move(entry));
  }
  return out;
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace polydecomp
