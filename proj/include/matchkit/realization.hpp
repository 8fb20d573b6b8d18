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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchkit/matchgate.hpp"

namespace matchkit {

/// Values at edge-entry positions of a 2^k × 2^l matrix whose corner is 1.
/// These determine the whole character matrix when one exists.
struct EdgeEntrySpec {
    size_t bits_in = 0;
    size_t bits_out = 0;
    std::map<std::pair<size_t, size_t>, Scalar> values;

    /// Reads the edge entries (and checks the corner) off a concrete matrix.
    static EdgeEntrySpec from_matrix(const Matrix& m, size_t k, size_t l);
};

/// Builds the standard matchgate (k inputs, one omittable node at k+1,
/// l outputs) whose character agrees with `spec` at every edge entry and has
/// corner 1. Missing positions are treated as 0.
Matchgate standard_gate_from_edge_entries(const EdgeEntrySpec& spec);

/// One multiplier used to normalize a matrix: its exact matrix, the gate
/// realizing it, and a tag ("flip" or "scale").
struct NormalizerStep {
    Matrix matrix;
    Matchgate gate;
    std::string kind;
    size_t bit = 0;       // flip position, when kind == "flip"
    Scalar factor = Scalar(1);  // scale factor, when kind == "scale"
};

/// normalized = L_m ··· L_1 · a · R_1 ··· R_p with corner 1, where `left`
/// and `right` list the steps in application order. a is recoverable as
/// L_1⁻¹ ··· L_m⁻¹ · normalized · R_p⁻¹ ··· R_1⁻¹.
struct Normalizers {
    std::vector<NormalizerStep> left;
    std::vector<NormalizerStep> right;
    Matrix normalized;
};

/// Moves the first nonzero entry (row-major) to the corner with single-bit
/// flip gates, then scales the corner to 1. Throws ZeroMatrix on all-zero
/// input.
Normalizers flip_and_scale_normalizers(const Matrix& a);

struct MembershipResult {
    bool is_member = false;
    /// When is_member: gates whose serial composition has character exactly
    /// the tested matrix.
    std::vector<Matchgate> witness;
};

/// Decides whether `a` (with 2-power dimensions) is the character matrix of
/// some matchgate, by normalizing the corner to 1, rebuilding the standard
/// gate from the edge entries and comparing the full character matrix.
MembershipResult is_character_matrix(const Matrix& a);

/// Gate list whose compose_serial chain has character exactly `a`.
/// Throws NotCharacterMatrix when membership fails.
std::vector<Matchgate> realize(const Matrix& a);

/// Character matrix of a serial chain, as a convenience for witnesses.
Matrix chain_character(const std::vector<Matchgate>& gates);

}  // namespace matchkit
