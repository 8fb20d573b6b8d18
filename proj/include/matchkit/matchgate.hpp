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

#include <string>
#include <vector>

#include "matchkit/matrix.hpp"
#include "matchkit/pfaffian.hpp"
#include "matchkit/skew_graph.hpp"

namespace matchkit {

/// A matchgate: weighted graph with input nodes X = {1..k}, output nodes
/// Y = {n−l+1..n}, and omittable nodes T (pairwise disjoint from X and Y).
/// Bit j's input is node j; bit j's output is node n+1−j.
struct Matchgate {
    SkewGraph graph;
    std::vector<size_t> inputs;     // ascending, must be 1..k
    std::vector<size_t> outputs;    // ascending, must be n−l+1..n
    std::vector<size_t> omittable;  // ascending

    size_t bits_in() const { return inputs.size(); }
    size_t bits_out() const { return outputs.size(); }
    size_t node_count() const { return graph.node_count(); }

    /// Node set is exactly X ∪ Y plus one omittable node.
    bool is_standard() const;

    /// Throws Error if the node-numbering conventions are violated.
    void validate() const;
};

/// 2^k × 2^l table of characters.
///
/// Row index r encodes i_1 … i_k with i_1 most significant; bit i_j = 1 means
/// input node j is matched externally (deleted). Column index c encodes
/// i_n i_{n−1} … i_{n−l+1} with i_n most significant, so the least-significant
/// column bit belongs to output node n−l+1. Rows and columns therefore both
/// read "bit 1 ... bit k" from the most significant position down.
class CharacterMatrix {
  public:
    CharacterMatrix(size_t bits_in, size_t bits_out, Matrix body);

    size_t bits_in() const { return bits_in_; }
    size_t bits_out() const { return bits_out_; }
    const Matrix& body() const { return body_; }

    const Scalar& at(size_t r, size_t c) const { return body_.at(r, c); }
    const Scalar& corner() const {
        return body_.at(body_.rows() - 1, body_.cols() - 1);
    }

    bool operator==(const CharacterMatrix& o) const {
        return bits_in_ == o.bits_in_ && bits_out_ == o.bits_out_ && body_ == o.body_;
    }

  private:
    size_t bits_in_, bits_out_;
    Matrix body_;
};

enum class Parity { even, odd, mixed };

std::string parity_name(Parity p);

/// Input-side modifier: zx ⊆ {1..k} sorted ascending as i_1 < … < i_m gives
/// (−1)^{Σ_j (i_j − j)}.
Scalar modifier_x(size_t k, const std::vector<size_t>& zx);

/// Output-side modifier: the input formula under the reflection i ↦ n+1−i.
Scalar modifier_y(size_t n, size_t l, const std::vector<size_t>& zy);

/// Overlap-counting modifier, usable as a diagnostic when every omittable
/// node lies strictly between max(X) and min(Y); equals
/// modifier_x · modifier_y there.
Scalar modifier_overlap_diagnostic(const Matchgate& g, const std::vector<size_t>& z);

/// χ(Γ, Z) = μ(Γ, Z) · PfS(G − Z) for Z ⊆ X ∪ Y (1-based node ids).
Scalar character(const Matchgate& g, const std::vector<size_t>& z);

/// All 2^k · 2^l characters under the index conventions above.
CharacterMatrix character_matrix(const Matchgate& g);

/// True iff the total number of zero bits across the row and column labels
/// is 1 or 2 (one or two missing external nodes).
bool is_edge_entry(size_t k, size_t l, size_t row, size_t col);

/// even: every entry with odd |Z| is zero. odd: every entry with even |Z|
/// is zero. The zero matrix classifies as even.
Parity parity_class(const CharacterMatrix& m);
Parity parity_class(const Matrix& m);

/// Serial composition: g2's nodes are renumbered after g1's and g1's output
/// n1+1−j is joined to g2's input j by a weight-1 edge. The character matrix
/// of the result is χ(g1)·χ(g2), exactly.
Matchgate compose_serial(const Matchgate& g1, const Matchgate& g2);

/// Decodes the external node set Z for entry (row, col) of a gate with
/// n nodes, k inputs and l outputs. Sorted ascending.
std::vector<size_t> entry_deleted_nodes(size_t n, size_t k, size_t l, size_t row,
                                        size_t col);

}  // namespace matchkit
