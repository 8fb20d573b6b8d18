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

#include "matchkit/matrix.hpp"

#include <sstream>

#include "matchkit/errors.hpp"

namespace matchkit {

Matrix::Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionMismatch("matrix dimensions must be >= 1");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> grid) {
    rows_ = grid.size();
    cols_ = rows_ ? grid.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionMismatch("matrix dimensions must be >= 1");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& row : grid) {
        if (row.size() != cols_) {
            throw DimensionMismatch("ragged initializer");
        }
        for (const auto& v : row) {
            data_.push_back(v);
        }
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m.at(i, i) = Scalar(1);
    }
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return data_ == o.data_;
}

Matrix Matrix::operator*(const Matrix& o) const {
    return mat_mul(*this, o);
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw DimensionMismatch("matrix sum shape mismatch");
    }
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = data_[i] + o.data_[i];
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = -data_[i];
    }
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = data_[i] * c;
    }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            out.at(c, r) = at(r, c);
        }
    }
    return out;
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix out(rows_ * o.rows_, cols_ * o.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            if (at(r, c).is_zero()) continue;
            for (size_t i = 0; i < o.rows_; ++i) {
                for (size_t j = 0; j < o.cols_; ++j) {
                    out.at(r * o.rows_ + i, c * o.cols_ + j) = at(r, c) * o.at(i, j);
                }
            }
        }
    }
    return out;
}

Scalar Matrix::det() const {
    return mat_det(*this);
}

Matrix Matrix::inverse() const {
    return mat_inverse(*this);
}

bool Matrix::is_zero() const {
    for (const auto& v : data_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_diagonal() const {
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            if (r != c && !at(r, c).is_zero()) return false;
        }
    }
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            if (at(r, c) != Scalar(r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        for (size_t c = 0; c < cols_; ++c) {
            os << at(r, c).str() << (c + 1 < cols_ ? " " : "");
        }
        os << (r + 1 < rows_ ? "\n" : "]");
    }
    return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("product shape mismatch");
    }
    Matrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t m = 0; m < a.cols(); ++m) {
            const Scalar& v = a.at(r, m);
            if (v.is_zero()) continue;
            for (size_t c = 0; c < b.cols(); ++c) {
                if (b.at(m, c).is_zero()) continue;
                out.at(r, c) += v * b.at(m, c);
            }
        }
    }
    return out;
}

Scalar mat_det(const Matrix& a) {
    if (!a.is_square()) {
        throw DimensionMismatch("determinant of non-square matrix");
    }
    const size_t n = a.rows();
    Matrix w = a;
    Scalar det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Scalar(0);
        if (pivot != col) {
            for (size_t c = 0; c < n; ++c) {
                std::swap(w.at(pivot, c), w.at(col, c));
            }
            det = -det;
        }
        det *= w.at(col, col);
        const Scalar inv = w.at(col, col).inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (w.at(r, col).is_zero()) continue;
            const Scalar f = w.at(r, col) * inv;
            for (size_t c = col; c < n; ++c) {
                w.at(r, c) -= f * w.at(col, c);
            }
        }
    }
    return det;
}

Matrix mat_inverse(const Matrix& a) {
    if (!a.is_square()) {
        throw DimensionMismatch("inverse of non-square matrix");
    }
    const size_t n = a.rows();
    Matrix w = a;
    Matrix inv = Matrix::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) {
            throw SingularMatrix("matrix is singular");
        }
        if (pivot != col) {
            for (size_t c = 0; c < n; ++c) {
                std::swap(w.at(pivot, c), w.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        const Scalar p = w.at(col, col).inverse();
        for (size_t c = 0; c < n; ++c) {
            w.at(col, c) *= p;
            inv.at(col, c) *= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || w.at(r, col).is_zero()) continue;
            const Scalar f = w.at(r, col);
            for (size_t c = 0; c < n; ++c) {
                w.at(r, c) -= f * w.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

bool mat_equal(const Matrix& a, const Matrix& b) {
    return a == b;
}

}  // namespace matchkit
