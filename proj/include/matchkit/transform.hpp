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

#include "matchkit/matchgate.hpp"

namespace matchkit {

/// Which side of the matrix an eliminator clears. `column` builds a left
/// multiplier acting on the last column (or column 2^k−2 for T4); `row`
/// builds the mirrored right multiplier.
enum class Side { column, row };

/// k-bit gate whose pair l is a weight-1 path of length 2 through an
/// unomittable middle node; every other pair is a unit edge. Its character
/// is the bit-l flip permutation up to entry signs.
Matchgate gate_T1_flip(size_t k, size_t l);

/// k-bit gate realizing c·E: unit identity pairs plus an omittable pair
/// carrying an edge of weight c−1.
Matchgate gate_T1_scale(size_t k, const Scalar& c);

/// Eliminator for phase T2. `missing` holds one or two bit positions; the
/// character matrix L has unit diagonal and entry −b at (X−missing, 2^k−1)
/// for Side::column, mirrored below the diagonal for Side::row. b = 0 gives
/// the identity gate.
Matchgate gate_T2_eliminator(size_t k, const std::vector<size_t>& missing,
                             const Scalar& b, Side side = Side::column);

/// C_{i,j}: crossed unit pairing on bit positions i and j, identity pairs
/// elsewhere. Left/right multiplication exchanges row/column pairs under the
/// bit transposition, up to entry signs; the corner entry is fixed at +1.
Matchgate gate_T3_swap(size_t k, size_t i, size_t j);

/// Diagonal gate: entry (I,I) is w when the last bit of I is 0, else 1.
Matchgate gate_T3_scale(size_t k, const Scalar& w);

/// Eliminator for phase T4 at bit i < k: unit diagonal, entry −v at
/// (X−{i}, Y−{bottom output}) for Side::column (mirrored for Side::row);
/// every other off-diagonal entry sits at a label pair with equal zero
/// count.
Matchgate gate_T4_eliminator(size_t k, size_t i, Side side, const Scalar& v);

/// Matrix-level reducibility test: corner and entry (2^k−2, 2^k−2) are 1 and
/// every other edge entry in the last two rows and columns is 0.
bool is_reducible(const CharacterMatrix& b);

/// One multiplier applied during reduce_to_reducible.
struct ReductionAction {
    Matrix matrix;
    Matchgate gate;
    std::string phase;  // "T1".."T4"
    bool left = true;
};

/// B = L_s ··· L_1 · A · R_1 ··· R_t, with all multipliers recorded in
/// application order.
struct ReductionTrace {
    std::vector<ReductionAction> lefts;
    std::vector<ReductionAction> rights;
    Matrix result;

    /// Recomputes L_s···L_1 · a · R_1···R_t.
    Matrix replay(const Matrix& a) const;
};

/// Runs phases T1–T4 on a nonsingular 2^k × 2^k character matrix, k >= 2.
/// Throws SingularInput when det = 0 or no usable edge entry exists in T3.
ReductionTrace reduce_to_reducible(const CharacterMatrix& a);

/// Even–even block of a reducible matrix: result(r,c) = b(2r, 2c).
CharacterMatrix peel(const CharacterMatrix& b);

/// Inserts a fresh bottom input and bottom output joined by a single
/// weight-1 edge, renumbering so conventions hold.
Matchgate extend(const Matchgate& g);

struct InversionResult {
    CharacterMatrix inverse;
    std::vector<Matchgate> witness;
};

/// Exact inverse of a nonsingular character matrix; verifies that the
/// inverse is again a character matrix and returns a witness realization.
InversionResult invert(const CharacterMatrix& a);

}  // namespace matchkit
