// Copyright 2026 The hubcast developers
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

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "hubcast/common.hpp"

namespace hubcast {

/// Small dense complex matrix, row-major.  Used for gate payloads, unitary
/// construction and test oracles — never for full-register simulation, which
/// goes through the statevector kernels instead.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  cplx& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const cplx& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  bool square() const { return rows == cols; }
};

inline Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw argument_error("matrix product: shape mismatch");
  Matrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const cplx v = x.at(i, k);
      if (v == cplx{}) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

inline Matrix operator*(const cplx& s, const Matrix& x) {
  Matrix out = x;
  for (auto& v : out.a) v *= s;
  return out;
}

inline Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw argument_error("matrix sum: shape mismatch");
  Matrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

inline Matrix adjoint(const Matrix& x) {
  Matrix out(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j)
      out.at(j, i) = std::conj(x.at(i, j));
  return out;
}

inline Matrix transpose(const Matrix& x) {
  Matrix out(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
  return out;
}

inline Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) {
      const cplx v = x.at(i, j);
      if (v == cplx{}) continue;
      for (std::size_t p = 0; p < y.rows; ++p)
        for (std::size_t q = 0; q < y.cols; ++q)
          out.at(i * y.rows + p, j * y.cols + q) = v * y.at(p, q);
    }
  return out;
}

inline double max_abs_diff(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw argument_error("matrix diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

/// Max |(X†X - I)_{ij}|; zero iff X is an isometry on its column space.
inline double unitarity_defect(const Matrix& x) {
  if (!x.square()) return 1.0;
  const Matrix g = adjoint(x) * x;
  double m = 0.0;
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = 0; j < g.cols; ++j)
      m = std::max(m, std::abs(g.at(i, j) - (i == j ? cplx{1.0} : cplx{})));
  return m;
}

inline bool is_unitary(const Matrix& x, double tol = kTightTol) {
  return x.square() && unitarity_defect(x) <= tol;
}

// ----- fixed single-qubit gates ---------------------------------------------

namespace gates {

inline Matrix i2() { return Matrix::identity(2); }

inline Matrix x() {
  Matrix m(2, 2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

inline Matrix y() {
  Matrix m(2, 2);
  m.at(0, 1) = cplx{0.0, -1.0};
  m.at(1, 0) = cplx{0.0, 1.0};
  return m;
}

inline Matrix z() {
  Matrix m(2, 2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

inline Matrix h() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);
  m.at(0, 0) = s;
  m.at(0, 1) = s;
  m.at(1, 0) = s;
  m.at(1, 1) = -s;
  return m;
}

/// Standard real rotation about Y: [[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]].
inline Matrix ry(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  Matrix m(2, 2);
  m.at(0, 0) = c;
  m.at(0, 1) = -s;
  m.at(1, 0) = s;
  m.at(1, 1) = c;
  return m;
}

/// R(x) = Ry(2·arccos x)·Z = [[x, √(1−x²)], [√(1−x²), −x]] for x ∈ [−1, 1].
/// Real, symmetric and involutive; the only parametrized gate the state
/// construction circuits need.
inline Matrix r(double x_) {
  if (!(x_ >= -1.0 && x_ <= 1.0))
    throw argument_error("r gate: parameter outside [-1,1]");
  const double s = std::sqrt(std::max(0.0, 1.0 - x_ * x_));
  Matrix m(2, 2);
  m.at(0, 0) = x_;
  m.at(0, 1) = s;
  m.at(1, 0) = s;
  m.at(1, 1) = -x_;
  return m;
}

/// X·Z (apply Z, then X): |0⟩ → |1⟩, |1⟩ → −|0⟩.
inline Matrix xz() { return x() * z(); }

/// Z·X (apply X, then Z): |0⟩ → −|1⟩, |1⟩ → |0⟩, i.e. [[0,1],[−1,0]].
inline Matrix zx() { return z() * x(); }

}  // namespace gates

}  // namespace hubcast
