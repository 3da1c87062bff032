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

#include "polydecomp/rational.h"

#include <cassert>
#include <cctype>

#include "polydecomp/error.h"

namespace polydecomp {
namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput:
      return "MalformedInput";
    case ErrorCode::kMalformedRational:
      return "MalformedRational";
    case ErrorCode::kUnbounded:
      return "Unbounded";
    case ErrorCode::kNotFullDimensional:
      return "NotFullDimensional";
    case ErrorCode::kNotSimple:
      return "NotSimple";
    case ErrorCode::kRedundantHalfSpace:
      return "RedundantHalfSpace";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kGenericityFailure:
      return "GenericityFailure";
    case ErrorCode::kAssumptionViolated:
      return "AssumptionViolated";
    case ErrorCode::kDegeneratePairing:
      return "DegeneratePairing";
  }
  return "Unknown";
}

bool IsPreconditionError(ErrorCode code) {
  return code == ErrorCode::kGenericityFailure ||
         code == ErrorCode::kAssumptionViolated ||
         code == ErrorCode::kDegeneratePairing;
}

Rational Frac(long num, long den) {
  assert(den != 0);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    throw Error(ErrorCode::kMalformedRational,
                "not a rational: \"" + std::string(text) + "\"");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kMalformedRational,
                "zero denominator: \"" + std::string(text) + "\"");
  }
  Rational r(mpz_class(std::string(num), 10), d);
  r.canonicalize();
  if (text.front() == '-') r = -r;
  return r;
}

std::string ToString(const Rational& value) { return value.get_str(10); }

std::string ToString(std::span<const Rational> v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += ToString(v[i]);
  }
  return out + ")";
}

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  assert(a.size() == b.size());
  Rational sum = 0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

QVector Add(std::span<const Rational> a, std::span<const Rational> b) {
  assert(a.size() == b.size());
  QVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector Subtract(std::span<const Rational> a, std::span<const Rational> b) {
  assert(a.size() == b.size());
  QVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector Scale(const Rational& s, std::span<const Rational> v) {
  QVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool IsZero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Rational L1Norm(std::span<const Rational> v) {
  Rational sum = 0;
  for (const auto& x : v) sum += abs(x);
  return sum;
}

QVector PrimitiveDirection(std::span<const Rational> v, Rational* multiplier) {
  assert(!IsZero(v));
  mpz_class den_lcm = 1;
  for (const auto& x : v) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            x.get_den().get_mpz_t());
  }
  mpz_class content = 0;
  for (const auto& x : v) {
    mpz_class scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, content);
  factor.canonicalize();
  if (multiplier != nullptr) *multiplier = factor;
  return Scale(factor, v);
}

}  // namespace polydecomp
