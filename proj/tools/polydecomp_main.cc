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

// Command-line front end. Every subcommand prints a JSON document on
// standard output and diagnostics on standard error. Exit codes: 0 every
// requested check passed, 1 a verification failed, 2 input error, 3
// precondition error (non-generic eta, non-admissible center).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polydecomp.h"

namespace {

constexpr int kInputError = 2;

struct PolytopeDeleter {
  void operator()(pd_polytope* p) const { pd_polytope_free(p); }
};
struct DecompositionDeleter {
  void operator()(pd_decomposition* d) const { pd_decomposition_free(d); }
};
using PolytopePtr = std::unique_ptr<pd_polytope, PolytopeDeleter>;
using DecompositionPtr =
    std::unique_ptr<pd_decomposition, DecompositionDeleter>;

class InputFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Prints the document (if any) and the error (if any); returns the exit code.
// The document is taken by address so it is read only after the producing
// call has run.
int Finish(pd_status status, char** document) {
  if (document != nullptr && *document != nullptr) {
    std::fputs(*document, stdout);
    pd_string_free(*document);
    *document = nullptr;
  }
  if (status == PD_VERIFICATION_FAILED) {
    std::fprintf(stderr, "verification failed\n");
  } else if (status != PD_OK) {
    std::fprintf(stderr, "error: %s\n", pd_last_error());
  }
  return status == PD_INTERNAL_ERROR ? kInputError : static_cast<int>(status);
}

class CStrings {
 public:
  explicit CStrings(const std::vector<std::string>& values) {
    for (const auto& v : values) ptrs_.push_back(v.c_str());
  }
  const char* const* data() const { return ptrs_.empty() ? nullptr : ptrs_.data(); }
  size_t size() const { return ptrs_.size(); }

 private:
  std::vector<const char*> ptrs_;
};

struct Options {
  std::string file;
  std::string kind;
  std::string rho;
  std::string decomposition_file;
  std::string data_file;
  std::vector<std::string> eta;
  std::vector<std::string> center;
  int points = 1000;
  int boxes = 32;
  std::uint64_t seed = 7;
  std::string spans = "default";
};

// Loads the polytope; on failure reports and returns the exit code in `code`.
PolytopePtr LoadPolytope(const std::string& path, int* code) {
  pd_polytope* raw = nullptr;
  const pd_status status = pd_polytope_parse(ReadFile(path).c_str(), &raw);
  if (status != PD_OK) {
    *code = Finish(status, nullptr);
    return nullptr;
  }
  return PolytopePtr(raw);
}

const std::vector<std::string>& KindParameter(const Options& o) {
  return o.kind == "lv" ? o.eta : o.center;
}

pd_kind ParseKind(const std::string& kind) {
  if (kind == "bg") return PD_BRIANCHON_GRAM;
  if (kind == "lv") return PD_LAWRENCE_VARCHENKO;
  return PD_WITTEN;
}

int RunCheck(const Options& o) {
  int code = 0;
  PolytopePtr p = LoadPolytope(o.file, &code);
  if (!p) return code;
  char* doc = nullptr;
  return Finish(pd_polytope_to_json(p.get(), &doc), &doc);
}

int RunFaces(const Options& o) {
  int code = 0;
  PolytopePtr p = LoadPolytope(o.file, &code);
  if (!p) return code;
  char* doc = nullptr;
  return Finish(pd_polytope_faces(p.get(), &doc), &doc);
}

int RunDecompose(const Options& o) {
  int code = 0;
  PolytopePtr p = LoadPolytope(o.file, &code);
  if (!p) return code;
  const CStrings param(KindParameter(o));
  pd_decomposition* raw = nullptr;
  pd_status status = pd_decompose(p.get(), ParseKind(o.kind), param.data(),
                                  param.size(), &raw);
  if (status != PD_OK) return Finish(status, nullptr);
  DecompositionPtr d(raw);
  char* doc = nullptr;
  return Finish(pd_decomposition_to_json(d.get(), &doc), &doc);
}

int RunVerify(const Options& o) {
  int code = 0;
  PolytopePtr p = LoadPolytope(o.file, &code);
  if (!p) return code;
  pd_decomposition* raw = nullptr;
  pd_status status;
  if (!o.decomposition_file.empty()) {
    status = pd_decomposition_parse(ReadFile(o.decomposition_file).c_str(),
                                    &raw);
  } else {
    const CStrings param(KindParameter(o));
    status = pd_decompose(p.get(), ParseKind(o.kind), param.data(),
                          param.size(), &raw);
  }
  if (status != PD_OK) return Finish(status, nullptr);
  DecompositionPtr d(raw);
  const pd_span_policy spans = o.spans == "probe"   ? PD_SPANS_PROBE
                               : o.spans == "avoid" ? PD_SPANS_AVOID
                                                    : PD_SPANS_DEFAULT;
  char* doc = nullptr;
  return Finish(
      pd_verify(p.get(), d.get(), o.points, o.boxes, o.seed, spans, &doc),
      &doc);
}

int RunLocalize(const Options& o) {
  int code = 0;
  PolytopePtr p = LoadPolytope(o.file, &code);
  if (!p) return code;
  const pd_rho rho = o.rho == "linear"   ? PD_RHO_LINEAR
                     : o.rho == "normsq" ? PD_RHO_NORM_SQUARE
                                         : PD_RHO_NEG_NORM_SQUARE;
  const CStrings vec(o.rho == "linear" ? o.eta : o.center);
  char* doc = nullptr;
  return Finish(pd_localize(p.get(), rho, vec.data(), vec.size(), &doc), &doc);
}

int RunAdmissibleCenter(const Options& o) {
  int code = 0;
  PolytopePtr p = LoadPolytope(o.file, &code);
  if (!p) return code;
  char* doc = nullptr;
  return Finish(pd_admissible_center(p.get(), &doc), &doc);
}

int RunMorseData(const Options& o) {
  int code = 0;
  PolytopePtr p = LoadPolytope(o.file, &code);
  if (!p) return code;
  const std::string data =
      o.data_file.empty() ? std::string() : ReadFile(o.data_file);
  const CStrings center(o.center);
  char* doc = nullptr;
  return Finish(pd_morse_data(p.get(), o.data_file.empty() ? nullptr : data.c_str(),
                              o.center.empty() ? nullptr : center.data(),
                              center.size(), &doc),
                &doc);
}

int RunExampleS2(const Options&) {
  char* doc = nullptr;
  return Finish(pd_example_s2(&doc), &doc);
}

void AddVectorOption(CLI::App* cmd, const char* name, std::vector<std::string>* v,
                     const char* help) {
  cmd->add_option(name, *v, help)->expected(1, CLI::detail::expected_max_vector_size);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact signed polytope decompositions (Brianchon-Gram, "
      "Lawrence-Varchenko, norm-square) and their verification.\n"
      "Rationals are written as integers or p/q. Exit codes: 0 pass, "
      "1 verification failed, 2 input error, 3 precondition error.",
      "polydecomp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pd_version());
  Options o;
  int (*run)(const Options&) = nullptr;
  const auto kinds = CLI::IsMember({"bg", "lv", "witten"});

  auto* check = app.add_subcommand("check", "Validate a polytope document");
  check->add_option("file", o.file, "Polytope document")->required();
  check->callback([&] { run = RunCheck; });

  auto* faces = app.add_subcommand("faces", "List the face lattice");
  faces->add_option("file", o.file, "Polytope document")->required();
  faces->callback([&] { run = RunFaces; });

  auto* decompose =
      app.add_subcommand("decompose", "Build and print a decomposition");
  decompose->add_option("file", o.file, "Polytope document")->required();
  decompose->add_option("kind", o.kind, "bg | lv | witten")
      ->required()
      ->check(kinds);
  AddVectorOption(decompose, "--eta", &o.eta, "Polarizing vector (lv)");
  AddVectorOption(decompose, "--center", &o.center, "Center (witten)");
  decompose->callback([&] { run = RunDecompose; });

  auto* verify = app.add_subcommand(
      "verify", "Verify a decomposition pointwise and by measure");
  verify->add_option("file", o.file, "Polytope document")->required();
  verify->add_option("kind", o.kind, "bg | lv | witten")->check(kinds);
  AddVectorOption(verify, "--eta", &o.eta, "Polarizing vector (lv)");
  AddVectorOption(verify, "--center", &o.center, "Center (witten)");
  verify->add_option("--points", o.points, "Pointwise sample count")
      ->capture_default_str();
  verify->add_option("--boxes", o.boxes, "Measure box count")
      ->capture_default_str();
  verify->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  verify
      ->add_option("--spans", o.spans,
                   "Pointwise policy: default (probe boundaries for bg, "
                   "avoid facet spans otherwise) | probe | avoid")
      ->check(CLI::IsMember({"default", "probe", "avoid"}))
      ->capture_default_str();
  verify->add_option("--decomposition", o.decomposition_file,
                     "Verify this decomposition document instead of "
                     "building one");
  verify->callback([&] {
    if (o.kind.empty() && o.decomposition_file.empty()) {
      throw CLI::ValidationError("verify", "give a kind or --decomposition");
    }
    run = RunVerify;
  });

  auto* localize =
      app.add_subcommand("localize", "Per-face critical data of rho");
  localize->add_option("file", o.file, "Polytope document")->required();
  localize->add_option("--rho", o.rho, "linear | normsq | negnormsq")
      ->required()
      ->check(CLI::IsMember({"linear", "normsq", "negnormsq"}));
  AddVectorOption(localize, "--eta", &o.eta, "Vector for linear rho");
  AddVectorOption(localize, "--center", &o.center,
                  "Center for normsq / negnormsq rho");
  localize->callback([&] { run = RunLocalize; });

  auto* admissible = app.add_subcommand(
      "admissible-center",
      "Search an admissible center by exact LP inside the vertex bounding "
      "box inflated by 2 (exit 1 when none is found there)");
  admissible->add_option("file", o.file, "Polytope document")->required();
  admissible->callback([&] { run = RunAdmissibleCenter; });

  auto* morse = app.add_subcommand(
      "morse-data", "Emit and verify Morse data (codimension-valued by default)");
  morse->add_option("file", o.file, "Polytope document")->required();
  morse->add_option("--data", o.data_file,
                    "Verify this Morse data document instead");
  AddVectorOption(morse, "--center", &o.center,
                  "Emit norm-square data for this center");
  morse->callback([&] { run = RunMorseData; });

  auto* example = app.add_subcommand(
      "example-s2",
      "The three decompositions of [-1,1] for the circle action on S^2");
  example->callback([&] { run = RunExampleS2; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    return run(o);
  } catch (const InputFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputError;
  }
}
