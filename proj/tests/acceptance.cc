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

// Acceptance run: one PASS/FAIL line per criterion. Every identity is checked
// with exact rational equality; the Monte-Carlo comparison uses 3 sigma.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polydecomp/clip.h"
#include "polydecomp/decomposition.h"
#include "polydecomp/error.h"
#include "polydecomp/example_s2.h"
#include "polydecomp/io.h"
#include "polydecomp/measure.h"
#include "polydecomp/taming.h"
#include "test_support.h"

namespace polydecomp {
namespace {

using testing::Fixture;
using testing::V;

constexpr std::uint64_t kSeed = 7;
constexpr int kPoints = 1000;
constexpr int kBoxes = 32;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// Polarizing vectors tried in order; the first two generic ones are used.
std::vector<QVector> GenericEtas(const SimplePolytope& p) {
  const std::vector<std::vector<long>> numerators = {
      {1, 3, 7, 11}, {-2, 5, -3, 13}, {5, -1, 2, -7}, {3, 2, -9, 4}};
  std::vector<QVector> out;
  for (const auto& nums : numerators) {
    QVector eta(p.dim());
    for (int k = 0; k < p.dim(); ++k) eta[k] = Frac(nums[k], 2 + 3 * k);
    try {
      LawrenceVarchenko(p, eta);
      out.push_back(eta);
    } catch (const Error&) {
    }
    if (out.size() == 2) break;
  }
  return out;
}

// Criterion 1 fixtures: the named shapes plus seeded random polytopes.
std::vector<Fixture> PointwiseFixtures() {
  std::vector<Fixture> out;
  for (auto& f : testing::AllFixtures()) {
    if (f.name != "interval") out.push_back(std::move(f));
  }
  return out;
}

Outcome Criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int runs = 0, probes = 0;
  for (const auto& [name, p] : PointwiseFixtures()) {
    const auto r = VerifyPointwise(p, BrianchonGram(p), kPoints, kSeed, false);
    ++runs;
    probes += r.samples;
    if (!r.pass()) {
      o.Fail(name + " has " + std::to_string(r.failures.size()) +
             " pointwise failures");
    }
  }
  const double secs = Seconds(start);
  if (secs >= 10) o.Fail("runtime " + std::to_string(secs) + " s");
  o.detail << runs << " fixtures, " << probes
           << " probes including boundary, " << secs << " s";
  return o;
}

Outcome Criterion2() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int pairs = 0;
  auto check = [&](const std::string& label, const SimplePolytope& p,
                   const Decomposition& d) {
    ++pairs;
    const auto r = VerifyMeasure(p, d, kBoxes, kSeed);
    if (!r.pass()) {
      o.Fail(label + " fails on " + std::to_string(r.failures.size()) +
             " boxes");
    }
  };
  for (const auto& [name, p] : testing::AllFixtures()) {
    check(name + " bg", p, BrianchonGram(p));
    const auto etas = GenericEtas(p);
    if (etas.size() < 2) o.Fail(name + " lacks two generic eta");
    for (const auto& eta : etas) {
      check(name + " lv " + ToString(eta), p, LawrenceVarchenko(p, eta));
    }
    const auto center = FindAdmissibleCenter(p);
    if (!center) {
      o.Fail(name + " has no admissible center");
      continue;
    }
    check(name + " witten", p, Witten(p, center->center));
  }
  const double secs = Seconds(start);
  if (secs >= 60) o.Fail("runtime " + std::to_string(secs) + " s");
  o.detail << pairs << " (fixture, decomposition) pairs x " << kBoxes
           << " boxes, " << secs << " s";
  return o;
}

// A cell as (sign, closed interval bounds) for the 1-D example; bounds are
// written "-inf" / "inf" when absent.
std::string IntervalCell(const Json& cell) {
  std::string lo = "-inf", hi = "inf";
  for (const auto& h : cell["halfspaces"]) {
    const Rational a = RationalFromJson(h["a"][0]);
    const Rational b = RationalFromJson(h["b"]);
    if (a > 0) hi = ToString(b / a);
    if (a < 0) lo = ToString(b / a);
  }
  return std::string(cell["sign"].get<int>() > 0 ? "+" : "-") + "[" + lo +
         "," + hi + "]";
}

Outcome Criterion3() {
  Outcome o;
  const Json doc = ExampleS2();
  const std::map<std::string, std::multiset<std::string>> expected = {
      {"linear", {"+[-1,inf]", "-[1,inf]"}},
      {"norm-square", {"-[1,inf]", "-[-inf,-1]", "+[-inf,inf]"}},
      {"negative-norm-square", {"+[-1,inf]", "+[-inf,1]", "-[-inf,inf]"}}};
  for (const auto& entry : doc["decompositions"]) {
    const std::string name = entry["name"].get<std::string>();
    std::multiset<std::string> cells;
    for (const auto& c : entry["decomposition"]["cells"]) {
      cells.insert(IntervalCell(c));
    }
    if (cells != expected.at(name)) {
      o.Fail(name + " cells differ");
    }
    if (!entry["measure"]["pass"].get<bool>() ||
        !entry["pointwise"]["pass"].get<bool>()) {
      o.Fail(name + " fails verification");
    }
  }
  if (doc["decompositions"].size() != 3) o.Fail("expected three entries");
  const std::string golden =
      testing::ReadText(testing::GoldenPath("example_s2.json"));
  if (Dump(doc) != golden) o.Fail("output differs from the golden file");
  if (Dump(ExampleS2()) != Dump(doc)) o.Fail("output is not stable");
  // Reversing eta swaps which ray is flipped.
  const auto p = Interval(-1, 1);
  const auto plus = LawrenceVarchenko(p, V({"1"}));
  const auto minus = LawrenceVarchenko(p, V({"-1"}));
  for (size_t i = 0; i < plus.cells.size(); ++i) {
    if (plus.cells[i].flips == minus.cells[i].flips) {
      o.Fail("eta = -1 does not complement the flips");
    }
  }
  o.detail << "linear, norm-square and negative norm-square cell lists, measure "
              "and pointwise verified, "
              "golden bytes equal";
  return o;
}

Outcome Criterion4() {
  Outcome o;
  int vertices = 0;
  for (const auto& [name, p] : testing::AllFixtures()) {
    for (const auto& eta : GenericEtas(p)) {
      const auto a = LawrenceVarchenko(p, eta);
      const auto b = LawrenceVarchenko(p, Scale(-1, eta));
      for (size_t i = 0; i < a.cells.size(); ++i) {
        ++vertices;
        if (b.cells[i].flip_count != p.dim() - a.cells[i].flip_count) {
          o.Fail(name + " flip count at vertex " + std::to_string(i));
        }
        for (size_t k = 0; k < a.cells[i].flips.size(); ++k) {
          if (a.cells[i].flips[k] == b.cells[i].flips[k]) {
            o.Fail(name + " flip mask at vertex " + std::to_string(i));
          }
        }
      }
    }
  }
  o.detail << vertices << " (vertex, eta) pairs";
  return o;
}

Outcome Criterion5() {
  Outcome o;
  const auto sq = testing::Square();
  const auto d = Witten(sq, V({"1/2", "1/2"}));
  // Expected cells written out by hand, as sets of {a, b} rows plus sign.
  using Cell = std::pair<int, std::set<std::pair<QVector, Rational>>>;
  auto cell = [](int sign, std::vector<std::pair<QVector, Rational>> rows) {
    return Cell{sign, {rows.begin(), rows.end()}};
  };
  const std::multiset<Cell> expected = {
      cell(1, {}),
      cell(-1, {{V({"1", "0"}), 0}}),   // edge x = 0 -> {x <= 0}
      cell(-1, {{V({"-1", "0"}), -1}}),  // edge x = 1 -> {x >= 1}
      cell(-1, {{V({"0", "1"}), 0}}),   // edge y = 0 -> {y <= 0}
      cell(-1, {{V({"0", "-1"}), -1}}),  // edge y = 1 -> {y >= 1}
      cell(1, {{V({"1", "0"}), 0}, {V({"0", "1"}), 0}}),
      cell(1, {{V({"-1", "0"}), -1}, {V({"0", "1"}), 0}}),
      cell(1, {{V({"1", "0"}), 0}, {V({"0", "-1"}), -1}}),
      cell(1, {{V({"-1", "0"}), -1}, {V({"0", "-1"}), -1}}),
  };
  std::multiset<Cell> got;
  for (const auto& c : d.cells) {
    std::set<std::pair<QVector, Rational>> rows;
    for (const auto& h : c.halfspaces) {
      const HalfSpace k = Canonicalize(h);
      rows.insert({k.normal, k.offset});
    }
    got.insert({c.sign, rows});
  }
  if (got != expected) o.Fail("cell list differs from the hand derivation");
  o.detail << d.cells.size() << " cells compared exactly";
  return o;
}

Outcome Criterion6() {
  Outcome o;
  const std::vector<Fixture> shapes = {{"square", testing::Square()},
                                       {"interval", Interval(-1, 1)},
                                       {"simplex2", StandardSimplex(2)},
                                       {"simplex3", StandardSimplex(3)}};
  for (const auto& [name, p] : shapes) {
    const auto c = FindAdmissibleCenter(p);
    if (!c || c->margin <= 0) {
      o.Fail(name + " has no positive margin");
      continue;
    }
    for (const auto& check : CheckAssumption(p, c->center)) {
      if (!check.pass) o.Fail(name + " center fails a face");
    }
    if (!VerifyMeasure(p, Witten(p, c->center), kBoxes, kSeed).pass()) {
      o.Fail(name + " witten measure");
    }
    o.detail << name << " c=" << ToString(c->center)
             << " margin=" << ToString(c->margin) << "; ";
  }
  return o;
}

Outcome Criterion7() {
  Outcome o;
  int chains = 0, frames = 0;
  for (const auto& [name, p] : testing::AllFixtures()) {
    if (!VerifyMorseData(p, GenerateMorseData(p)).empty()) {
      o.Fail(name + " codimension Morse data");
    }
    const auto c = FindAdmissibleCenter(p);
    if (!c) {
      o.Fail(name + " has no admissible center");
      continue;
    }
    const MorseData data = NormSquareMorseData(p, c->center);
    if (!VerifyMorseData(p, data).empty()) {
      o.Fail(name + " norm-square Morse data");
    }
    for (const auto& f : data.entries) {
      for (const auto& g : data.entries) {
        if (g.active.size() <= f.active.size() ||
            !std::includes(g.active.begin(), g.active.end(), f.active.begin(),
                           f.active.end())) {
          continue;
        }
        ++chains;
        if (!(f.alpha < g.alpha)) o.Fail(name + " alpha not increasing");
      }
    }
    for (int q = 0; q < static_cast<int>(p.vertices().size()); ++q) {
      const auto xi = DualEdgeFrame(p, p.VertexFace(q));
      const auto frame = MakeEdgeFrame(p, q);
      for (size_t k = 0; k < xi.size(); ++k) {
        ++frames;
        // Positive multiple: xi = t g with t > 0 coordinate-wise.
        std::optional<Rational> ratio;
        bool parallel = true;
        for (int i = 0; i < p.dim(); ++i) {
          const auto& a = xi[k][i];
          const auto& b = frame.generators[k][i];
          if (sgn(b) == 0) {
            parallel = parallel && sgn(a) == 0;
            continue;
          }
          const Rational t = a / b;
          if (ratio && *ratio != t) parallel = false;
          ratio = t;
        }
        if (!parallel || !ratio || *ratio <= 0) {
          o.Fail(name + " dual frame not a positive multiple");
        }
      }
    }
  }
  o.detail << chains << " subface pairs, " << frames << " frame vectors";
  return o;
}

Outcome Criterion8() {
  Outcome o;
  int shapes = 0;
  double worst = 0;
  for (const auto& [name, p] : testing::AllFixtures()) {
    const Box box = BoundingBox(p, Frac(3, 2));
    const Rational exact = ExactVolume(Clip(p.halfspaces(), box));
    const auto mc = MonteCarloVolume(p.halfspaces(), box, 100000, kSeed);
    ++shapes;
    const double z = std::abs(mc.estimate - exact.get_d()) / mc.sigma;
    worst = std::max(worst, z);
    if (!(z <= 3)) o.Fail(name + " off by " + std::to_string(z) + " sigma");
  }
  if (shapes < 10) o.Fail("fewer than 10 shapes");
  Rational factorial = 1;
  for (int n = 2; n <= 4; ++n) {
    factorial *= n;
    const auto s = StandardSimplex(n);
    if (ExactVolume(Clip(s.halfspaces(), BoundingBox(s, 2))) != 1 / factorial) {
      o.Fail("simplex volume in dimension " + std::to_string(n));
    }
  }
  o.detail << shapes << " shapes, worst deviation " << worst
           << " sigma; simplex volumes 1/2, 1/6, 1/24 exact";
  return o;
}

Outcome Criterion9() {
  Outcome o;
  long checks = 0;
  for (const auto& [name, p] : testing::AllFixtures()) {
    const Box region = BoundingBox(p, 3);
    for (int id = 0; id < static_cast<int>(p.faces().size()); ++id) {
      const auto cone = MakeTangentCone(p, id);
      for (const auto& x : SamplePoints(region, 50, kSeed + id)) {
        ++checks;
        if (Satisfies(cone.halfspaces, x) !=
            InTangentConeByDefinition(p, id, x)) {
          o.Fail(name + " face " + std::to_string(id) + " at " + ToString(x));
        }
      }
    }
  }
  o.detail << checks << " (face, point) checks";
  return o;
}

Outcome Criterion10() {
  Outcome o;
  const auto sq = testing::Square();
  auto corrupted = BrianchonGram(sq);
  corrupted.cells[0].sign = -corrupted.cells[0].sign;
  const auto r = VerifyMeasure(sq, corrupted, kBoxes, kSeed);
  const double fraction = static_cast<double>(r.failures.size()) / kBoxes;
  if (!(fraction > 0.9)) o.Fail("corrupted sign fails only on a fraction");
  o.detail << "corrupted sign fails " << r.failures.size() << "/" << kBoxes
           << " boxes; ";
  try {
    LawrenceVarchenko(sq, V({"1", "0"}));
    o.Fail("eta = (1,0) accepted");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kGenericityFailure) o.Fail("wrong error kind");
    o.detail << "eta=(1,0): " << ErrorCodeName(e.code()) << "; ";
  }
  const auto tri = StandardSimplex(2);
  try {
    Witten(tri, V({"2", "2"}));
    o.Fail("c = (2,2) accepted");
  } catch (const Error& e) {
    const int x_axis = *tri.FindFace({1});
    const auto& ids = e.indices();
    if (e.code() != ErrorCode::kAssumptionViolated ||
        std::find(ids.begin(), ids.end(), x_axis) == ids.end()) {
      o.Fail("c = (2,2) does not name the x-axis edge");
    }
    o.detail << "c=(2,2): " << e.what();
  }
  return o;
}

}  // namespace
}  // namespace polydecomp

int main() {
  using polydecomp::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {{"BG pointwise identity with boundary probes", polydecomp::Criterion1},
       {"measure identities for BG, LV and Witten", polydecomp::Criterion2},
       {"circle action on S^2: three interval decompositions", polydecomp::Criterion3},
       {"LV flip complement", polydecomp::Criterion4},
       {"Witten cells of the square at its center", polydecomp::Criterion5},
       {"admissible-center pipeline", polydecomp::Criterion6},
       {"Morse data and dual edge frames", polydecomp::Criterion7},
       {"Monte-Carlo and simplex volume oracles", polydecomp::Criterion8},
       {"tangent-cone definition equivalence", polydecomp::Criterion9},
       {"negative controls", polydecomp::Criterion10}};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("criterion %2zu: %s  %s -- %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
