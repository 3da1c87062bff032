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

#include "polydecomp.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "polydecomp/error.h"
#include "polydecomp/example_s2.h"
#include "polydecomp/io.h"
#include "polydecomp/measure.h"
#include "polydecomp/taming.h"

struct pd_polytope {
  polydecomp::SimplePolytope value;
};

struct pd_decomposition {
  polydecomp::Decomposition value;
};

namespace {

using polydecomp::Error;
using polydecomp::ErrorCode;
using polydecomp::Json;

thread_local std::string last_error;
thread_local std::string last_error_kind;

void ClearError() {
  last_error.clear();
  last_error_kind.clear();
}

pd_status Fail(pd_status status, const std::string& kind,
               const std::string& message) {
  last_error_kind = kind;
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes. `body` returns the
// status to report on success.
template <typename Body>
pd_status Guard(Body&& body) {
  ClearError();
  try {
    return body();
  } catch (const Error& e) {
    const pd_status status = polydecomp::IsPreconditionError(e.code())
                                 ? PD_PRECONDITION_ERROR
                                 : PD_INPUT_ERROR;
    return Fail(status, polydecomp::ErrorCodeName(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(PD_INTERNAL_ERROR, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return Fail(PD_INTERNAL_ERROR, "Internal", e.what());
  }
}

void RequireNonNull(const void* ptr, const char* what) {
  if (ptr == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must not be NULL");
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Emit(const Json& j, char** out) {
  RequireNonNull(out, "out");
  *out = CopyString(polydecomp::Dump(j));
}

polydecomp::QVector ParseVector(const char* const* values, size_t count) {
  if (count > 0) RequireNonNull(values, "vector");
  polydecomp::QVector v;
  for (size_t i = 0; i < count; ++i) {
    RequireNonNull(values[i], "vector entry");
    v.push_back(polydecomp::ParseRational(values[i]));
  }
  return v;
}

void RequireSamePolytope(const polydecomp::SimplePolytope& p,
                         const polydecomp::Decomposition& d) {
  bool same = d.dim == p.dim() && d.polytope.size() == p.halfspaces().size();
  for (size_t i = 0; same && i < d.polytope.size(); ++i) {
    same = polydecomp::Canonicalize(d.polytope[i]) == p.halfspaces()[i];
  }
  if (!same) {
    throw Error(ErrorCode::kInvalidArgument,
                "decomposition was built for a different polytope");
  }
}

}  // namespace

extern "C" {

const char* pd_version(void) { return "0.1.0"; }

const char* pd_last_error(void) { return last_error.c_str(); }

const char* pd_last_error_kind(void) { return last_error_kind.c_str(); }

void pd_string_free(char* s) { std::free(s); }

pd_status pd_polytope_parse(const char* document, pd_polytope** out) {
  return Guard([&] {
    RequireNonNull(document, "document");
    RequireNonNull(out, "out");
    *out = nullptr;
    *out = new pd_polytope{polydecomp::ParsePolytope(document)};
    return PD_OK;
  });
}

void pd_polytope_free(pd_polytope* p) { delete p; }

int pd_polytope_dim(const pd_polytope* p) {
  return p == nullptr ? -1 : p->value.dim();
}

pd_status pd_polytope_to_json(const pd_polytope* p, char** out) {
  return Guard([&] {
    RequireNonNull(p, "polytope");
    Emit(polydecomp::PolytopeToJson(p->value), out);
    return PD_OK;
  });
}

pd_status pd_polytope_faces(const pd_polytope* p, char** out) {
  return Guard([&] {
    RequireNonNull(p, "polytope");
    Emit(polydecomp::FaceLatticeToJson(p->value), out);
    return PD_OK;
  });
}

pd_status pd_decompose(const pd_polytope* p, pd_kind kind,
                       const char* const* parameter, size_t count,
                       pd_decomposition** out) {
  return Guard([&] {
    RequireNonNull(p, "polytope");
    RequireNonNull(out, "out");
    *out = nullptr;
    polydecomp::Decomposition d;
    switch (kind) {
      case PD_BRIANCHON_GRAM:
        d = polydecomp::BrianchonGram(p->value);
        break;
      case PD_LAWRENCE_VARCHENKO:
        d = polydecomp::LawrenceVarchenko(p->value,
                                          ParseVector(parameter, count));
        break;
      case PD_WITTEN:
        d = polydecomp::Witten(p->value, ParseVector(parameter, count));
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument, "unknown decomposition kind");
    }
    *out = new pd_decomposition{std::move(d)};
    return PD_OK;
  });
}

pd_status pd_decomposition_parse(const char* document,
                                 pd_decomposition** out) {
  return Guard([&] {
    RequireNonNull(document, "document");
    RequireNonNull(out, "out");
    *out = nullptr;
    *out = new pd_decomposition{
        polydecomp::DecompositionFromJson(polydecomp::ParseJson(document))};
    return PD_OK;
  });
}

void pd_decomposition_free(pd_decomposition* d) { delete d; }

pd_status pd_decomposition_to_json(const pd_decomposition* d, char** out) {
  return Guard([&] {
    RequireNonNull(d, "decomposition");
    Emit(polydecomp::DecompositionToJson(d->value), out);
    return PD_OK;
  });
}

pd_status pd_verify(const pd_polytope* p, const pd_decomposition* d,
                    int points, int boxes, uint64_t seed,
                    pd_span_policy spans, char** out) {
  return Guard([&] {
    RequireNonNull(p, "polytope");
    RequireNonNull(d, "decomposition");
    RequireSamePolytope(p->value, d->value);
    bool avoid = false;
    switch (spans) {
      case PD_SPANS_DEFAULT:
        avoid = d->value.kind != polydecomp::DecompositionKind::kBrianchonGram;
        break;
      case PD_SPANS_PROBE:
        avoid = false;
        break;
      case PD_SPANS_AVOID:
        avoid = true;
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument, "unknown span policy");
    }
    const auto pointwise =
        polydecomp::VerifyPointwise(p->value, d->value, points, seed, avoid);
    const auto measure =
        polydecomp::VerifyMeasure(p->value, d->value, boxes, seed);
    const bool pass = pointwise.pass() && measure.pass();
    Emit(Json{{"kind", polydecomp::DecompositionKindName(d->value.kind)},
              {"pass", pass},
              {"pointwise", polydecomp::ReportToJson(pointwise)},
              {"measure", polydecomp::ReportToJson(measure)}},
         out);
    return pass ? PD_OK : PD_VERIFICATION_FAILED;
  });
}

pd_status pd_localize(const pd_polytope* p, pd_rho rho,
                      const char* const* vector, size_t count, char** out) {
  return Guard([&] {
    RequireNonNull(p, "polytope");
    polydecomp::QVector v = ParseVector(vector, count);
    polydecomp::TamingSpec spec;
    switch (rho) {
      case PD_RHO_LINEAR:
        spec = polydecomp::TamingSpec::Linear(std::move(v));
        break;
      case PD_RHO_NORM_SQUARE:
        spec = polydecomp::TamingSpec::NormSquare(std::move(v));
        break;
      case PD_RHO_NEG_NORM_SQUARE:
        spec = polydecomp::TamingSpec::NegNormSquare(std::move(v));
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument, "unknown rho");
    }
    Emit(polydecomp::LocalizingSetToJson(
             p->value, spec, polydecomp::LocalizingSet(p->value, spec)),
         out);
    return PD_OK;
  });
}

pd_status pd_check_assumption(const pd_polytope* p, const char* const* center,
                              size_t count, char** out) {
  return Guard([&] {
    RequireNonNull(p, "polytope");
    const auto checks =
        polydecomp::CheckAssumption(p->value, ParseVector(center, count));
    const Json doc = polydecomp::AssumptionToJson(p->value, checks);
    Emit(doc, out);
    return doc["pass"].get<bool>() ? PD_OK : PD_VERIFICATION_FAILED;
  });
}

pd_status pd_admissible_center(const pd_polytope* p, char** out) {
  return Guard([&] {
    RequireNonNull(p, "polytope");
    const auto center = polydecomp::FindAdmissibleCenter(p->value);
    Emit(polydecomp::AdmissibleCenterToJson(p->value, center), out);
    return center ? PD_OK : PD_VERIFICATION_FAILED;
  });
}

pd_status pd_morse_data(const pd_polytope* p, const char* data,
                        const char* const* center, size_t count, char** out) {
  return Guard([&] {
    RequireNonNull(p, "polytope");
    polydecomp::MorseData morse;
    const char* source = "codimension";
    if (data != nullptr) {
      morse = polydecomp::MorseDataFromJson(polydecomp::ParseJson(data));
      source = "input";
    } else if (center != nullptr) {
      morse = polydecomp::NormSquareMorseData(p->value,
                                              ParseVector(center, count));
      source = "norm-square";
    } else {
      morse = polydecomp::GenerateMorseData(p->value);
    }
    const auto violations = polydecomp::VerifyMorseData(p->value, morse);
    Json doc{{"source", source},
             {"verified", violations.empty()},
             {"violations", polydecomp::MorseViolationsToJson(violations)}};
    doc["entries"] = polydecomp::MorseDataToJson(morse)["entries"];
    Emit(doc, out);
    return violations.empty() ? PD_OK : PD_VERIFICATION_FAILED;
  });
}

pd_status pd_example_s2(char** out) {
  return Guard([&] {
    const Json doc = polydecomp::ExampleS2();
    Emit(doc, out);
    return doc["pass"].get<bool>() ? PD_OK : PD_VERIFICATION_FAILED;
  });
}

}  // extern "C"
