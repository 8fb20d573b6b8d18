// Copyright 2026 The Matchkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "matchkit/scalar.hpp"

namespace matchkit {

/// Dense row-major matrix of exact rationals.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> grid);

    static Matrix identity(size_t n);
    static Matrix zero(size_t rows, size_t cols) { return Matrix(rows, cols); }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-() const;

    /// Scales every entry.
    Matrix scaled(const Scalar& c) const;

    Matrix transposed() const;

    /// Kronecker product, this ⊗ o.
    Matrix kron(const Matrix& o) const;

    Scalar det() const;
    Matrix inverse() const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_diagonal() const;
    bool is_identity() const;

    std::string str() const;

  private:
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Exact matrix product; throws DimensionMismatch when a.cols != b.rows.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Exact determinant via rational Gaussian elimination; square input only.
Scalar mat_det(const Matrix& a);

/// Exact inverse; throws SingularMatrix when det = 0.
Matrix mat_inverse(const Matrix& a);

/// True iff same shape and all entries equal exactly.
bool mat_equal(const Matrix& a, const Matrix& b);

}  // namespace matchkit
