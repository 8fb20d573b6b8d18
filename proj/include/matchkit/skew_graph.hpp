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
#include <utility>
#include <vector>

#include "matchkit/scalar.hpp"

namespace matchkit {

/// Weighted undirected graph held as a skew-symmetric adjacency matrix.
/// Nodes are 1..n. For i < j, entry (i,j) is the edge weight w(i,j), zero
/// meaning "no edge"; (j,i) is −w(i,j) and the diagonal is zero. A weight of
/// zero and an absent edge are the same thing.
class SkewGraph {
  public:
    SkewGraph() : n_(0) {}
    explicit SkewGraph(size_t n) : n_(n), w_(n * n) {}

    size_t node_count() const { return n_; }

    /// Signed adjacency entry M(i,j); 1-based.
    const Scalar& entry(size_t i, size_t j) const { return w_[(i - 1) * n_ + (j - 1)]; }

    /// Sets w(i,j) for i != j, keeping skew symmetry. The weight is
    /// interpreted as the i<j orientation regardless of argument order.
    void set_weight(size_t i, size_t j, const Scalar& w);

    /// Edge weight in the canonical i<j orientation; w(i,j) = w(j,i).
    Scalar weight(size_t i, size_t j) const;

    bool has_edge(size_t i, size_t j) const { return !weight(i, j).is_zero(); }

    void check_node(size_t i) const;

    bool operator==(const SkewGraph& o) const { return n_ == o.n_ && w_ == o.w_; }

  private:
    size_t n_;
    std::vector<Scalar> w_;
};

/// A partial pairing of 1..n: index pairs (a, b) with a < b, sorted by first
/// element, no index repeated. Represents a matching of the graph when every
/// pair is an edge.
struct Pairing {
    std::vector<std::pair<size_t, size_t>> pairs;

    /// Throws IndexError if malformed (order or repetition violated).
    void validate() const;
};

}  // namespace matchkit
