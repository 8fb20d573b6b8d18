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
#include <random>

#include "matchkit/scalar.hpp"

namespace matchkit {

/// Seeded generator with fully deterministic helpers. std::mt19937_64 output
/// is pinned by the standard; the std:: distributions are not, so the helpers
/// below use raw draws only. Identical seeds give identical streams on every
/// platform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    /// Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant
    /// for test-corpus generation; determinism is what matters.
    int64_t uniform(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
    }

    bool chance(int num, int den) { return uniform(0, den - 1) < num; }

    /// Small random rational with |numerator| <= mag, denominator in [1, dmax].
    Scalar rational(int mag = 5, int dmax = 3) {
        long num = static_cast<long>(uniform(-mag, mag));
        long den = static_cast<long>(uniform(1, dmax));
        return Scalar(num, den);
    }

    /// Like rational() but never zero.
    Scalar nonzero_rational(int mag = 5, int dmax = 3) {
        while (true) {
            Scalar s = rational(mag, dmax);
            if (!s.is_zero()) return s;
        }
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace matchkit
