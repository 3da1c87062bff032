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

#ifndef POLYDECOMP_LINALG_H_
#define POLYDECOMP_LINALG_H_

#include <optional>
#include <vector>

#include "polydecomp/rational.h"

namespace polydecomp {

// Dense row-major rational matrix.
using Matrix = std::vector<QVector>;

int Rank(Matrix m);

Rational Determinant(Matrix m);

// Solves a x = b for square a; nullopt when a is singular.
std::optional<QVector> SolveSquare(const Matrix& a, const QVector& b);

std::optional<Matrix> Inverse(const Matrix& a);

Matrix Transpose(const Matrix& a);

// Basis of {x in Q^cols : m x = 0}, one vector per free column of the
// reduced row echelon form.
std::vector<QVector> NullSpace(const Matrix& m, int cols);

// Orthogonal projection of v onto the span of the (linearly independent)
// rows of `rows`. An empty `rows` projects to zero.
QVector ProjectOntoRowSpace(const Matrix& rows, const QVector& v);

// Dimension of the affine hull of `points` (-1 for the empty set).
int AffineDimension(const std::vector<QVector>& points);

}  // namespace polydecomp

#endif  // POLYDECOMP_LINALG_H_
