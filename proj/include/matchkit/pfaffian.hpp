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
#include <vector>

#include "matchkit/skew_graph.hpp"

namespace matchkit {

/// (−1)^{number of overlapping pairs}, where (a,b),(c,d) overlap iff
/// a<c<b<d or c<a<d<b.
Scalar pairing_sign(const Pairing& p);

/// Pfaffian straight from the defining sum over all perfect pairings,
/// with the sign of each pairing computed independently by pairing_sign.
/// 1 when n = 0, 0 when n is odd. Exponential; the oracle for pf_eliminate.
Scalar pf_definition(const SkewGraph& g);

/// Pfaffian by skew-symmetric elimination, first-nonzero pivot pair.
/// Polynomial time; equals pf_definition exactly.
Scalar pf_eliminate(const SkewGraph& g);

/// M[A]: deletes the rows and columns with indices in `drop` (1-based),
/// renumbering the remaining nodes consecutively in order.
SkewGraph pf_delete(const SkewGraph& g, const std::vector<size_t>& drop);

/// Pfaffian Sum with 0/1 lambda: sum over subsets A of {i : lambda_i = 1}
/// of Pf(M[A]).
Scalar pf_sum(const SkewGraph& g, const std::vector<int>& lambda);

struct MatchingTerm {
    Pairing pairing;
    Scalar monomial;  // product of matched edge weights
};

/// Every matching (over existing edges) that saturates all nodes in
/// `required` (1-based). Other nodes may be matched or left alone.
std::vector<MatchingTerm> enumerate_matchings(const SkewGraph& g,
                                              const std::vector<size_t>& required);

/// Answers many PfS(G − Z) queries against one graph. Internal nodes
/// (neither external nor omittable) are eliminated once by congruence;
/// each query then deletes the requested externals plus an omittable
/// subset from the small residual matrix. Exact.
class PfsEvaluator {
  public:
    PfsEvaluator(const SkewGraph& g, std::vector<size_t> externals,
                 std::vector<size_t> omittables);

    /// PfS(G − Z) with lambda = 1 exactly on the omittable nodes;
    /// `deleted_externals` must be a subset of the externals (1-based).
    Scalar eval(const std::vector<size_t>& deleted_externals) const;

  private:
    size_t n_;
    Scalar factor_;                     // product of pivots with position signs
    std::vector<Scalar> residual_;      // dense skew matrix on residual nodes
    std::vector<size_t> residual_ids_;  // original 1-based ids, ascending
    std::vector<int> residual_pos_;     // original id -> residual index, -1 if gone
    std::vector<int> flip_;             // per residual node: ±1 over spanning pivot pairs
    std::vector<size_t> omit_pos_;      // residual indices of omittable nodes
};

}  // namespace matchkit
