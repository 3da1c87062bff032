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

#include "polydecomp/measure.h"

#include <chrono>
#include <cmath>

#include "polydecomp/clip.h"
#include "polydecomp/error.h"

namespace polydecomp {
namespace {

double MillisecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

bool OnFacetSpan(const SimplePolytope& p, std::span<const Rational> x) {
  for (const auto& h : p.halfspaces()) {
    if (sgn(Excess(h, x)) == 0) return true;
  }
  return false;
}

void RequirePositive(int count, const char* what) {
  if (count < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " count must be at least 1");
  }
}

}  // namespace

Rational RationalSampler::NextCoordinate(const Rational& lo,
                                         const Rational& hi) {
  const mpz_class den(kSampleDenominator);
  mpz_class first, last;
  // Smallest grid index strictly above lo and largest strictly below hi.
  const Rational lo_scaled = lo * den;
  const Rational hi_scaled = hi * den;
  mpz_fdiv_q(first.get_mpz_t(), lo_scaled.get_num_mpz_t(),
             lo_scaled.get_den_mpz_t());
  first += 1;
  mpz_cdiv_q(last.get_mpz_t(), hi_scaled.get_num_mpz_t(),
             hi_scaled.get_den_mpz_t());
  last -= 1;
  if (last < first) {
    throw Error(ErrorCode::kInvalidArgument,
                "sampling region narrower than the 2^-16 grid");
  }
  const mpz_class span = last - first + 1;
  const std::uint64_t word = engine_();
  mpz_class raw;
  mpz_import(raw.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
  Rational x(first + raw % span, den);
  x.canonicalize();
  return x;
}

QVector RationalSampler::NextPoint(const Box& region) {
  QVector x(region.dim());
  for (int k = 0; k < region.dim(); ++k) {
    x[k] = NextCoordinate(region.lower[k], region.upper[k]);
  }
  return x;
}

Box RationalSampler::NextBox(const Box& region) {
  while (true) {
    QVector a = NextPoint(region);
    QVector b = NextPoint(region);
    bool degenerate = false;
    for (int k = 0; k < region.dim(); ++k) {
      if (a[k] == b[k]) degenerate = true;
      if (b[k] < a[k]) swap(a[k], b[k]);
    }
    if (!degenerate) return {std::move(a), std::move(b)};
  }
}

std::vector<QVector> SamplePoints(const Box& region, int count,
                                  std::uint64_t seed) {
  RequirePositive(count, "point");
  RationalSampler sampler(seed);
  std::vector<QVector> out;
  for (int i = 0; i < count; ++i) out.push_back(sampler.NextPoint(region));
  return out;
}

std::vector<Box> SampleBoxes(const Box& region, int count,
                             std::uint64_t seed) {
  RequirePositive(count, "box");
  RationalSampler sampler(seed);
  std::vector<Box> out;
  for (int i = 0; i < count; ++i) out.push_back(sampler.NextBox(region));
  return out;
}

Rational SignedVolume(const Decomposition& d, const Box& box) {
  Rational total = 0;
  for (const auto& cell : d.cells) {
    const Rational v = ExactVolume(Clip(cell.halfspaces, box));
    if (cell.sign > 0) {
      total += v;
    } else {
      total -= v;
    }
  }
  return total;
}

VerificationReport VerifyPointwise(const SimplePolytope& p,
                                   const Decomposition& d, int points,
                                   std::uint64_t seed,
                                   bool avoid_facet_spans) {
  RequirePositive(points, "point");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.kind = VerificationReport::Kind::kPointwise;
  report.seed = seed;
  report.avoid_facet_spans = avoid_facet_spans;

  const Box region = BoundingBox(p, 2);
  RationalSampler sampler(seed);
  std::vector<QVector> probes;
  for (int i = 0; i < points; ++i) {
    QVector x = sampler.NextPoint(region);
    while (avoid_facet_spans && OnFacetSpan(p, x)) x = sampler.NextPoint(region);
    probes.push_back(std::move(x));
  }
  if (!avoid_facet_spans) {
    for (const auto& v : p.vertices()) probes.push_back(v.point);
    for (const auto& f : p.faces()) {
      if (f.dim == 1) {
        probes.push_back(Scale(Frac(1, 2),
                               Add(p.vertices()[f.vertex_ids[0]].point,
                                   p.vertices()[f.vertex_ids[1]].point)));
      }
    }
    for (const auto& f : p.faces()) probes.push_back(f.witness);
  }
  for (auto& x : probes) {
    const int expected = p.Contains(x) ? 1 : 0;
    const int got = IndicatorSum(d, x);
    if (got != expected) {
      report.failures.push_back({std::move(x), std::nullopt, expected, got});
    }
  }
  report.samples = static_cast<int>(probes.size());
  report.elapsed_ms = MillisecondsSince(start);
  return report;
}

VerificationReport VerifyMeasure(const SimplePolytope& p,
                                 const Decomposition& d, int boxes,
                                 std::uint64_t seed) {
  RequirePositive(boxes, "box");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.kind = VerificationReport::Kind::kMeasure;
  report.seed = seed;
  report.samples = boxes;
  for (const Box& box : SampleBoxes(BoundingBox(p, 2), boxes, seed)) {
    const Rational expected = ExactVolume(Clip(p.halfspaces(), box));
    const Rational got = SignedVolume(d, box);
    if (got != expected) report.failures.push_back({{}, box, expected, got});
  }
  report.elapsed_ms = MillisecondsSince(start);
  return report;
}

MonteCarloEstimate MonteCarloVolume(std::span<const HalfSpace> halfspaces,
                                    const Box& box, int samples,
                                    std::uint64_t seed) {
  if (samples < 1000) {
    throw Error(ErrorCode::kInvalidArgument,
                "Monte-Carlo volume needs at least 1000 samples");
  }
  const int n = box.dim();
  std::vector<std::vector<double>> normals;
  std::vector<double> offsets;
  for (const auto& h : halfspaces) {
    std::vector<double> a;
    for (const auto& x : h.normal) a.push_back(x.get_d());
    normals.push_back(std::move(a));
    offsets.push_back(h.offset.get_d());
  }
  std::vector<std::uniform_real_distribution<double>> coords;
  for (int k = 0; k < n; ++k) {
    coords.emplace_back(box.lower[k].get_d(), box.upper[k].get_d());
  }
  std::mt19937_64 engine(seed);
  std::vector<double> x(n);
  long hits = 0;
  for (int s = 0; s < samples; ++s) {
    for (int k = 0; k < n; ++k) x[k] = coords[k](engine);
    bool inside = true;
    for (size_t i = 0; i < normals.size() && inside; ++i) {
      double dot = 0;
      for (int k = 0; k < n; ++k) dot += normals[i][k] * x[k];
      inside = dot <= offsets[i];
    }
    if (inside) ++hits;
  }
  const double box_volume = box.Volume().get_d();
  const double fraction = static_cast<double>(hits) / samples;
  return {fraction * box_volume,
          box_volume * std::sqrt(fraction * (1 - fraction) / samples)};
}

}  // namespace polydecomp
