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

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "matchkit/errors.hpp"

namespace matchkit {

/// Exact rational number. Every operation is exact; there is no floating
/// point anywhere in the library. Values are always kept canonical:
/// denominator > 0 and gcd(|numerator|, denominator) = 1, with zero
/// represented as 0/1.
class Scalar {
  public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors int literals
    Scalar(long num, long den);
    explicit Scalar(const mpq_class& v);

    /// Parses "p", "-p" or "p/q". Throws ParseError on anything else.
    static Scalar parse(const std::string& text);

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar operator+(const Scalar& o) const { return Scalar(mpq_class(v_ + o.v_)); }
    Scalar operator-(const Scalar& o) const { return Scalar(mpq_class(v_ - o.v_)); }
    Scalar operator*(const Scalar& o) const { return Scalar(mpq_class(v_ * o.v_)); }
    Scalar operator/(const Scalar& o) const;

    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }
    bool operator<(const Scalar& o) const { return v_ < o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Scalar inverse() const;
    Scalar abs() const { return Scalar(mpq_class(::abs(v_))); }

    std::string numerator() const { return v_.get_num().get_str(); }
    std::string denominator() const { return v_.get_den().get_str(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace matchkit
