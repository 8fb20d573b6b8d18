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

#include "matchkit/transform.hpp"

#include <algorithm>
#include <bit>

#include "matchkit/errors.hpp"
#include "matchkit/realization.hpp"

namespace matchkit {

namespace {

/// k-bit skeleton: inputs 1..k, outputs top, optional middle nodes, with the
/// identity pairing (j, n+1−j) at weight 1 on every bit.
Matchgate identity_pairs_gate(size_t k, size_t middle_nodes) {
    Matchgate g;
    const size_t n = 2 * k + middle_nodes;
    g.graph = SkewGraph(n);
    for (size_t j = 1; j <= k; ++j) {
        g.inputs.push_back(j);
        g.outputs.push_back(k + middle_nodes + j);
        g.graph.set_weight(j, n + 1 - j, Scalar(1));
    }
    std::sort(g.outputs.begin(), g.outputs.end());
    return g;
}

size_t bits_of(const CharacterMatrix& m) {
    if (m.bits_in() != m.bits_out()) {
        throw DimensionMismatch("square character matrix required");
    }
    return m.bits_in();
}

}  // namespace

Matchgate gate_T1_flip(size_t k, size_t l) {
    if (l < 1 || l > k) {
        throw IndexError("flip position out of range");
    }
    // Pair l runs through the middle node k+1; the middle node is unomittable.
    Matchgate g;
    const size_t n = 2 * k + 1;
    g.graph = SkewGraph(n);
    for (size_t j = 1; j <= k; ++j) {
        g.inputs.push_back(j);
        g.outputs.push_back(k + 1 + j);
        if (j == l) {
            g.graph.set_weight(j, k + 1, Scalar(1));
            g.graph.set_weight(k + 1, n + 1 - j, Scalar(1));
        } else {
            g.graph.set_weight(j, n + 1 - j, Scalar(1));
        }
    }
    g.validate();
    return g;
}

Matchgate gate_T1_scale(size_t k, const Scalar& c) {
    // Identity pairs around an omittable pair whose edge carries c−1; the
    // pair contributes (c−1) matched plus 1 omitted, i.e. a global factor c.
    Matchgate g = identity_pairs_gate(k, 2);
    g.graph.set_weight(k + 1, k + 2, c - Scalar(1));
    g.omittable = {k + 1, k + 2};
    g.validate();
    return g;
}

namespace {

/// Builds the T2 gate for a fixed signed weight; the caller picks the sign.
Matchgate t2_gate_with_weight(size_t k, const std::vector<size_t>& missing,
                              const Scalar& w, Side side) {
    if (missing.size() == 1) {
        // One extra edge between the missing external and an omittable node.
        Matchgate g = identity_pairs_gate(k, 1);
        const size_t t = k + 1;
        g.omittable = {t};
        const size_t i = missing[0];
        if (side == Side::column) {
            g.graph.set_weight(i, t, w);
        } else {
            g.graph.set_weight(t, 2 * k + 2 - i, w);
        }
        g.validate();
        return g;
    }
    // Two missing externals joined directly.
    Matchgate g = identity_pairs_gate(k, 0);
    const size_t i = missing[0], j = missing[1];
    if (side == Side::column) {
        g.graph.set_weight(i, j, w);
    } else {
        g.graph.set_weight(2 * k + 1 - j, 2 * k + 1 - i, w);
    }
    g.validate();
    return g;
}

}  // namespace

Matchgate gate_T2_eliminator(size_t k, const std::vector<size_t>& missing,
                             const Scalar& b, Side side) {
    if (missing.empty() || missing.size() > 2) {
        throw IndexError("T2 eliminator needs one or two missing positions");
    }
    for (size_t i : missing) {
        if (i < 1 || i > k) throw IndexError("missing position out of range");
    }
    if (missing.size() == 2 && missing[0] >= missing[1]) {
        throw IndexError("missing positions must be ascending");
    }
    if (b.is_zero()) {
        return identity_pairs_gate(k, 0);
    }
    // Target entry: (X − missing, 2^k−1) for columns, transposed for rows.
    size_t stripped = (size_t{1} << k) - 1;
    for (size_t i : missing) stripped &= ~(size_t{1} << (k - i));
    const size_t row = (side == Side::column) ? stripped : (size_t{1} << k) - 1;
    const size_t col = (side == Side::column) ? (size_t{1} << k) - 1 : stripped;

    // The paper fixes the outcome (entry = −b), not the edge sign; try both.
    Matchgate g = t2_gate_with_weight(k, missing, b, side);
    if (character_matrix(g).at(row, col) != -b) {
        g = t2_gate_with_weight(k, missing, -b, side);
    }
    return g;
}

Matchgate gate_T3_swap(size_t k, size_t i, size_t j) {
    if (i == j || i < 1 || j < 1 || i > k || j > k) {
        throw IndexError("swap positions must be distinct and within 1..k");
    }
    Matchgate g;
    const size_t n = 2 * k;
    g.graph = SkewGraph(n);
    for (size_t t = 1; t <= k; ++t) {
        g.inputs.push_back(t);
        g.outputs.push_back(k + t);
        size_t target = t;
        if (t == i) target = j;
        if (t == j) target = i;
        g.graph.set_weight(t, n + 1 - target, Scalar(1));
    }
    g.validate();
    return g;
}

Matchgate gate_T3_scale(size_t k, const Scalar& w) {
    if (w.is_zero()) {
        throw Error("T3 scale weight must be nonzero");
    }
    Matchgate g = identity_pairs_gate(k, 0);
    g.graph.set_weight(k, k + 1, w);  // the bottom pair
    g.validate();
    return g;
}

namespace {

Matchgate t4_gate_with_weight(size_t k, size_t i, Side side, const Scalar& w) {
    Matchgate g = identity_pairs_gate(k, 0);
    if (side == Side::column) {
        g.graph.set_weight(i, k + 1, w);  // input i to the bottom output
    } else {
        g.graph.set_weight(k, 2 * k + 1 - i, w);  // bottom input to output i
    }
    g.validate();
    return g;
}

}  // namespace

Matchgate gate_T4_eliminator(size_t k, size_t i, Side side, const Scalar& v) {
    if (i < 1 || i >= k) {
        throw IndexError("T4 eliminator needs 1 <= i < k");
    }
    if (v.is_zero()) {
        return identity_pairs_gate(k, 0);
    }
    const size_t full = (size_t{1} << k) - 1;
    const size_t with_i_missing = full & ~(size_t{1} << (k - i));
    const size_t bottom_missing = full - 1;  // 2^k − 2
    const size_t row = (side == Side::column) ? with_i_missing : bottom_missing;
    const size_t col = (side == Side::column) ? bottom_missing : with_i_missing;

    Matchgate g = t4_gate_with_weight(k, i, side, v);
    if (character_matrix(g).at(row, col) != -v) {
        g = t4_gate_with_weight(k, i, side, -v);
    }
    return g;
}

bool is_reducible(const CharacterMatrix& b) {
    const size_t k = bits_of(b);
    if (k < 2) {
        throw DimensionMismatch("reducibility is defined for k >= 2");
    }
    const size_t dim = size_t{1} << k;
    if (!b.at(dim - 1, dim - 1).is_one()) return false;
    if (!b.at(dim - 2, dim - 2).is_one()) return false;
    for (size_t r = 0; r < dim; ++r) {
        for (size_t c = 0; c < dim; ++c) {
            const bool in_band = (r >= dim - 2) || (c >= dim - 2);
            if (!in_band || (r == dim - 2 && c == dim - 2)) continue;
            if (is_edge_entry(k, k, r, c) && !b.at(r, c).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

Matrix ReductionTrace::replay(const Matrix& a) const {
    Matrix acc = a;
    for (const auto& act : lefts) {
        acc = act.matrix * acc;
    }
    for (const auto& act : rights) {
        acc = acc * act.matrix;
    }
    return acc;
}

ReductionTrace reduce_to_reducible(const CharacterMatrix& a) {
    const size_t k = bits_of(a);
    if (k < 2) {
        throw DimensionMismatch("reduce_to_reducible needs k >= 2");
    }
    if (mat_det(a.body()).is_zero()) {
        throw SingularInput("input matrix is singular");
    }
    const size_t dim = size_t{1} << k;
    const size_t last = dim - 1;

    ReductionTrace trace;
    Matrix work = a.body();
    auto apply_left = [&](const Matchgate& gate, const std::string& phase) {
        Matrix m = character_matrix(gate).body();
        work = m * work;
        trace.lefts.push_back({m, gate, phase, true});
    };
    auto apply_right = [&](const Matchgate& gate, const std::string& phase) {
        Matrix m = character_matrix(gate).body();
        work = work * m;
        trace.rights.push_back({m, gate, phase, false});
    };

    // T1: bring a nonzero entry to the corner, normalize it to 1.
    if (work.at(last, last).is_zero()) {
        size_t r0 = 0, c0 = 0;
        bool found = false;
        for (size_t r = 0; r < dim && !found; ++r) {
            for (size_t c = 0; c < dim && !found; ++c) {
                if (!work.at(r, c).is_zero()) {
                    r0 = r;
                    c0 = c;
                    found = true;
                }
            }
        }
        for (size_t l = 1; l <= k; ++l) {
            if (!(r0 & (size_t{1} << (k - l)))) apply_left(gate_T1_flip(k, l), "T1");
        }
        for (size_t l = 1; l <= k; ++l) {
            if (!(c0 & (size_t{1} << (k - l)))) apply_right(gate_T1_flip(k, l), "T1");
        }
    }
    if (!work.at(last, last).is_one()) {
        apply_left(gate_T1_scale(k, work.at(last, last).inverse()), "T1");
    }

    // Edge-entry rows/columns of the last column/row, in decreasing order.
    std::vector<size_t> edge_labels;
    for (size_t r = dim; r-- > 0;) {
        const size_t missing = k - std::popcount(r);
        if (missing >= 1 && missing <= 2) edge_labels.push_back(r);
    }
    auto missing_bits = [&](size_t label) {
        std::vector<size_t> out;
        for (size_t j = 1; j <= k; ++j) {
            if (!(label & (size_t{1} << (k - j)))) out.push_back(j);
        }
        return out;
    };

    // T2: clear edge entries of the last column, then of the last row.
    for (size_t r : edge_labels) {
        const Scalar b = work.at(r, last);
        if (b.is_zero()) continue;
        apply_left(gate_T2_eliminator(k, missing_bits(r), b, Side::column), "T2");
    }
    for (size_t c : edge_labels) {
        const Scalar b = work.at(last, c);
        if (b.is_zero()) continue;
        apply_right(gate_T2_eliminator(k, missing_bits(c), b, Side::row), "T2");
    }

    // T3: set entry (2^k−2, 2^k−2) to 1.
    if (!work.at(dim - 2, dim - 2).is_one()) {
        if (work.at(dim - 2, dim - 2).is_zero()) {
            size_t pick_i = 0, pick_j = 0;
            for (size_t i = 1; i <= k && pick_i == 0; ++i) {
                for (size_t j = 1; j <= k; ++j) {
                    const size_t r = last & ~(size_t{1} << (k - i));
                    const size_t c = last & ~(size_t{1} << (k - j));
                    if (!work.at(r, c).is_zero()) {
                        pick_i = i;
                        pick_j = j;
                        break;
                    }
                }
            }
            if (pick_i == 0) {
                throw SingularInput("no nonzero edge entry available in phase T3");
            }
            if (pick_i != k) apply_left(gate_T3_swap(k, pick_i, k), "T3");
            if (pick_j != k) apply_right(gate_T3_swap(k, pick_j, k), "T3");
        }
        apply_left(gate_T3_scale(k, work.at(dim - 2, dim - 2).inverse()), "T3");
    }

    // T4: clear edge entries of column 2^k−2, then of row 2^k−2.
    for (size_t i = k - 1; i >= 1; --i) {
        const size_t r = last & ~(size_t{1} << (k - i));
        const Scalar v = work.at(r, dim - 2);
        if (!v.is_zero()) {
            apply_left(gate_T4_eliminator(k, i, Side::column, v), "T4");
        }
        if (i == 1) break;
    }
    for (size_t j = k - 1; j >= 1; --j) {
        const size_t c = last & ~(size_t{1} << (k - j));
        const Scalar v = work.at(dim - 2, c);
        if (!v.is_zero()) {
            apply_right(gate_T4_eliminator(k, j, Side::row, v), "T4");
        }
        if (j == 1) break;
    }

    trace.result = work;
    if (!is_reducible(CharacterMatrix(k, k, work))) {
        throw Error("internal: T1-T4 did not reach a reducible matrix");
    }
    return trace;
}

CharacterMatrix peel(const CharacterMatrix& b) {
    if (!is_reducible(b)) {
        throw NotReducible("peel requires a reducible character matrix");
    }
    const size_t k = bits_of(b);
    const size_t half = size_t{1} << (k - 1);
    Matrix out(half, half);
    for (size_t r = 0; r < half; ++r) {
        for (size_t c = 0; c < half; ++c) {
            out.at(r, c) = b.at(2 * r, 2 * c);
        }
    }
    return CharacterMatrix(k - 1, k - 1, std::move(out));
}

Matchgate extend(const Matchgate& g) {
    g.validate();
    if (g.bits_in() != g.bits_out()) {
        throw DimensionMismatch("extend requires a square gate");
    }
    const size_t k = g.bits_in();
    const size_t n = g.node_count();
    // Old node i maps to: i (i <= k), i+1 (internal), i+2 (outputs).
    auto remap = [&](size_t i) -> size_t {
        if (i <= k) return i;
        if (i <= n - k) return i + 1;
        return i + 2;
    };
    Matchgate out;
    out.graph = SkewGraph(n + 2);
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = i + 1; j <= n; ++j) {
            const Scalar w = g.graph.weight(i, j);
            if (!w.is_zero()) out.graph.set_weight(remap(i), remap(j), w);
        }
    }
    const size_t new_in = k + 1;
    const size_t new_out = n - k + 2;
    out.graph.set_weight(new_in, new_out, Scalar(1));
    for (size_t j = 1; j <= k + 1; ++j) out.inputs.push_back(j);
    for (size_t j = new_out; j <= n + 2; ++j) out.outputs.push_back(j);
    for (size_t t : g.omittable) out.omittable.push_back(remap(t));
    out.validate();
    return out;
}

InversionResult invert(const CharacterMatrix& a) {
    const size_t k = bits_of(a);
    (void)k;
    if (mat_det(a.body()).is_zero()) {
        throw SingularMatrix("character matrix is singular");
    }
    if (!is_character_matrix(a.body()).is_member) {
        throw NotCharacterMatrix("input is not a character matrix");
    }
    Matrix inv = mat_inverse(a.body());
    MembershipResult membership = is_character_matrix(inv);
    if (!membership.is_member) {
        throw TheoremViolation(
            "inverse of a nonsingular character matrix failed membership; "
            "this is a counterexample");
    }
    return {CharacterMatrix(a.bits_in(), a.bits_out(), inv), membership.witness};
}

}  // namespace matchkit
