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

#include "matchkit/skew_graph.hpp"

#include <set>

#include "matchkit/errors.hpp"

namespace matchkit {

void SkewGraph::check_node(size_t i) const {
    if (i < 1 || i > n_) {
        throw IndexError("node index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(n_));
    }
}

void SkewGraph::set_weight(size_t i, size_t j, const Scalar& w) {
    check_node(i);
    check_node(j);
    if (i == j) {
        throw IndexError("no self loops");
    }
    if (i > j) std::swap(i, j);
    w_[(i - 1) * n_ + (j - 1)] = w;
    w_[(j - 1) * n_ + (i - 1)] = -w;
}

Scalar SkewGraph::weight(size_t i, size_t j) const {
    check_node(i);
    check_node(j);
    if (i == j) return Scalar(0);
    if (i > j) std::swap(i, j);
    return w_[(i - 1) * n_ + (j - 1)];
}

void Pairing::validate() const {
    std::set<size_t> seen;
    size_t prev_first = 0;
    for (const auto& [a, b] : pairs) {
        if (a >= b) {
            throw IndexError("pair not in increasing order");
        }
        if (a <= prev_first && prev_first != 0) {
            throw IndexError("pairs not sorted by first element");
        }
        prev_first = a;
        if (!seen.insert(a).second || !seen.insert(b).second) {
            throw IndexError("repeated index in pairing");
        }
    }
}

}  // namespace matchkit
