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

#include "matchkit/realization.hpp"

#include <bit>

#include "matchkit/errors.hpp"
#include "matchkit/transform.hpp"

namespace matchkit {

namespace {

bool is_power_of_two(size_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

size_t log2_exact(size_t v) {
    if (!is_power_of_two(v)) {
        throw DimensionMismatch("dimension is not a power of two");
    }
    return static_cast<size_t>(std::countr_zero(v));
}

/// Gate with k inputs, one unomittable middle node, l outputs and no edges.
/// Every character entry is zero (the middle node can never be matched).
Matchgate zero_gate(size_t k, size_t l) {
    Matchgate g;
    g.graph = SkewGraph(k + l + 1);
    for (size_t j = 1; j <= k; ++j) g.inputs.push_back(j);
    for (size_t j = 1; j <= l; ++j) g.outputs.push_back(k + 1 + j);
    g.validate();
    return g;
}

}  // namespace

EdgeEntrySpec EdgeEntrySpec::from_matrix(const Matrix& m, size_t k, size_t l) {
    if (m.rows() != (size_t{1} << k) || m.cols() != (size_t{1} << l)) {
        throw DimensionMismatch("matrix shape does not match bit counts");
    }
    if (!m.at(m.rows() - 1, m.cols() - 1).is_one()) {
        throw Error("corner entry must be 1 in an edge-entry spec");
    }
    EdgeEntrySpec spec;
    spec.bits_in = k;
    spec.bits_out = l;
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (is_edge_entry(k, l, r, c)) {
                spec.values[{r, c}] = m.at(r, c);
            }
        }
    }
    return spec;
}

Matchgate standard_gate_from_edge_entries(const EdgeEntrySpec& spec) {
    const size_t k = spec.bits_in;
    const size_t l = spec.bits_out;
    const size_t n = k + l + 1;
    const size_t t = k + 1;  // the omittable node sits between inputs and outputs

    Matchgate g;
    g.graph = SkewGraph(n);
    for (size_t j = 1; j <= k; ++j) g.inputs.push_back(j);
    for (size_t j = 1; j <= l; ++j) g.outputs.push_back(k + 1 + j);
    g.omittable.push_back(t);

    for (const auto& [pos, value] : spec.values) {
        const auto [row, col] = pos;
        if (!is_edge_entry(k, l, row, col)) {
            throw Error("spec contains a non-edge-entry position");
        }
        if (value.is_zero()) continue;
        // D = the missing external nodes of this entry.
        std::vector<size_t> missing;
        for (size_t j = 1; j <= k; ++j) {
            if (!(row & (size_t{1} << (k - j)))) missing.push_back(j);
        }
        for (size_t b = 0; b < l; ++b) {
            if (!(col & (size_t{1} << b))) missing.push_back(t + 1 + b);
        }
        const auto z = entry_deleted_nodes(n, k, l, row, col);
        std::vector<size_t> zx, zy;
        for (size_t i : z) {
            (i <= k ? zx : zy).push_back(i);
        }
        const Scalar mu = modifier_x(k, zx) * modifier_y(n, l, zy);
        if (missing.size() == 1) {
            g.graph.set_weight(missing[0], t, mu * value);
        } else {
            g.graph.set_weight(missing[0], missing[1], mu * value);
        }
    }
    g.validate();
    return g;
}

Normalizers flip_and_scale_normalizers(const Matrix& a) {
    if (a.is_zero()) {
        throw ZeroMatrix("cannot normalize the zero matrix");
    }
    const size_t k = log2_exact(a.rows());
    const size_t l = log2_exact(a.cols());

    // First nonzero entry, row-major.
    size_t r0 = 0, c0 = 0;
    bool found = false;
    for (size_t r = 0; r < a.rows() && !found; ++r) {
        for (size_t c = 0; c < a.cols() && !found; ++c) {
            if (!a.at(r, c).is_zero()) {
                r0 = r;
                c0 = c;
                found = true;
            }
        }
    }

    Normalizers out;
    Matrix work = a;
    for (size_t j = 1; j <= k; ++j) {
        if (!(r0 & (size_t{1} << (k - j)))) {
            Matchgate gate = gate_T1_flip(k, j);
            Matrix fm = character_matrix(gate).body();
            work = fm * work;
            out.left.push_back({fm, gate, "flip", j, Scalar(1)});
        }
    }
    for (size_t j = 1; j <= l; ++j) {
        if (!(c0 & (size_t{1} << (l - j)))) {
            Matchgate gate = gate_T1_flip(l, j);
            Matrix fm = character_matrix(gate).body();
            work = work * fm;
            out.right.push_back({fm, gate, "flip", j, Scalar(1)});
        }
    }
    const Scalar corner = work.at(work.rows() - 1, work.cols() - 1);
    if (corner.is_zero()) {
        throw Error("internal: flips failed to move a nonzero entry to the corner");
    }
    if (!corner.is_one()) {
        const Scalar c = corner.inverse();
        Matchgate gate = gate_T1_scale(k, c);
        Matrix sm = character_matrix(gate).body();
        work = sm * work;
        out.left.push_back({sm, gate, "scale", 0, c});
    }
    out.normalized = work;
    return out;
}

namespace {

/// Gate realizing the inverse of a flip normalizer. A flip character F
/// satisfies F·F = D with D a ±1 diagonal, so F⁻¹ = F·D = F³: three copies
/// of the flip gate in series.
Matchgate flip_inverse_gate(const Matchgate& flip) {
    return compose_serial(flip, compose_serial(flip, flip));
}

}  // namespace

MembershipResult is_character_matrix(const Matrix& a) {
    const size_t k = log2_exact(a.rows());
    const size_t l = log2_exact(a.cols());

    if (a.is_zero()) {
        return {true, {zero_gate(k, l)}};
    }

    const Normalizers norm = flip_and_scale_normalizers(a);
    const EdgeEntrySpec spec = EdgeEntrySpec::from_matrix(norm.normalized, k, l);
    const Matchgate candidate = standard_gate_from_edge_entries(spec);
    if (character_matrix(candidate).body() != norm.normalized) {
        return {false, {}};
    }

    // a = L_1⁻¹ ··· L_m⁻¹ · normalized · R_p⁻¹ ··· R_1⁻¹.
    std::vector<Matchgate> witness;
    for (const auto& step : norm.left) {
        witness.push_back(step.kind == "flip" ? flip_inverse_gate(step.gate)
                                              : gate_T1_scale(k, step.factor.inverse()));
    }
    witness.push_back(candidate);
    for (auto it = norm.right.rbegin(); it != norm.right.rend(); ++it) {
        witness.push_back(flip_inverse_gate(it->gate));
    }
    return {true, witness};
}

std::vector<Matchgate> realize(const Matrix& a) {
    MembershipResult res = is_character_matrix(a);
    if (!res.is_member) {
        throw NotCharacterMatrix("matrix is not a character matrix");
    }
    return res.witness;
}

Matrix chain_character(const std::vector<Matchgate>& gates) {
    if (gates.empty()) {
        throw Error("empty gate chain");
    }
    Matchgate acc = gates[0];
    for (size_t i = 1; i < gates.size(); ++i) {
        acc = compose_serial(acc, gates[i]);
    }
    return character_matrix(acc).body();
}

}  // namespace matchkit
