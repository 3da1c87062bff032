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

#include "polydecomp/linalg.h"

#include <cassert>
#include <utility>

#include "polydecomp/error.h"

namespace polydecomp {
namespace {

// In-place reduction to reduced row echelon form. Returns the pivot column
// of each nonzero row, in order.
// Pivots are searched in the first `cols` columns; row operations span the
// full width so augmented columns are carried along.
std::vector<int> ReduceRowEchelon(Matrix& m, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (sgn(m[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[row], m[pivot]);
    const int width = static_cast<int>(m[row].size());
    const Rational inv = 1 / m[row][col];
    for (int c = col; c < width; ++c) m[row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c < width; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Rank(Matrix m) {
  if (m.empty()) return 0;
  const int cols = static_cast<int>(m[0].size());
  // Forward elimination only.
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (sgn(m[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

Rational Determinant(Matrix m) {
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (sgn(m[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[col], m[pivot]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<QVector> SolveSquare(const Matrix& a, const QVector& b) {
  const int n = static_cast<int>(a.size());
  assert(static_cast<int>(b.size()) == n);
  Matrix aug(n, QVector(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  const auto pivots = ReduceRowEchelon(aug, n);
  if (static_cast<int>(pivots.size()) < n) return std::nullopt;
  QVector x(n);
  for (int i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::optional<Matrix> Inverse(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  Matrix aug(n, QVector(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = ReduceRowEchelon(aug, n);
  if (static_cast<int>(pivots.size()) < n) return std::nullopt;
  Matrix inv(n, QVector(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

Matrix Transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), QVector(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

std::vector<QVector> NullSpace(const Matrix& m, int cols) {
  Matrix r = m;
  const auto pivots = ReduceRowEchelon(r, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVector x(cols);
    x[free_col] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r[i][free_col];
    basis.push_back(std::move(x));
  }
  return basis;
}

QVector ProjectOntoRowSpace(const Matrix& rows, const QVector& v) {
  if (rows.empty()) return QVector(v.size());
  const int k = static_cast<int>(rows.size());
  Matrix gram(k, QVector(k));
  QVector rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) gram[i][j] = Dot(rows[i], rows[j]);
    rhs[i] = Dot(rows[i], v);
  }
  const auto coeffs = SolveSquare(gram, rhs);
  if (!coeffs) {
    throw Error(ErrorCode::kInvalidArgument,
                "projection onto dependent row set");
  }
  QVector out(v.size());
  for (int i = 0; i < k; ++i) {
    for (size_t c = 0; c < v.size(); ++c) out[c] += (*coeffs)[i] * rows[i][c];
  }
  return out;
}

int AffineDimension(const std::vector<QVector>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (size_t i = 1; i < points.size(); ++i) {
    diffs.push_back(Subtract(points[i], points[0]));
  }
  return Rank(std::move(diffs));
}

}  // namespace polydecomp
