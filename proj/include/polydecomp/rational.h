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

#ifndef POLYDECOMP_RATIONAL_H_
#define POLYDECOMP_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polydecomp {

// Arbitrary-precision rational, always kept in canonical form (coprime,
// positive denominator) by GMP.
using Rational = mpq_class;

// A point of R^n or a covector of (R^n)^*; the standard inner product
// identifies the two.
using QVector = std::vector<Rational>;

// num/den in canonical form; den must be nonzero.
Rational Frac(long num, long den);

// Parses "p", "-p" or "p/q". Throws Error(kMalformedRational) on anything
// else, including a zero denominator.
Rational ParseRational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string ToString(const Rational& value);
std::string ToString(std::span<const Rational> v);

Rational Dot(std::span<const Rational> a, std::span<const Rational> b);
QVector Add(std::span<const Rational> a, std::span<const Rational> b);
QVector Subtract(std::span<const Rational> a, std::span<const Rational> b);
QVector Scale(const Rational& s, std::span<const Rational> v);
bool IsZero(std::span<const Rational> v);

// Sum of absolute values.
Rational L1Norm(std::span<const Rational> v);

// The unique primitive integer vector (entries coprime) that is a positive
// multiple of `v`. Also returns the multiplier. `v` must be nonzero.
QVector PrimitiveDirection(std::span<const Rational> v,
                           Rational* multiplier = nullptr);

}  // namespace polydecomp

#endif  // POLYDECOMP_RATIONAL_H_
