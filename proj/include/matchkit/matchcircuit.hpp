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

#include <optional>
#include <string>
#include <vector>

#include "matchkit/matchgate.hpp"

namespace matchkit {

enum class GateKind { diagonal, even, odd, prefix_arbitrary };

std::string gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

/// A gate placed on consecutive bits of a circuit. The gate may be supplied
/// as a graph, as a character matrix, or both. The kind is declared by the
/// caller and verified by validate_circuit, never inferred: the odd/even
/// declaration drives the sign wiring of the circuit graph.
struct GatePlacement {
    size_t start_bit = 1;  // 1-based, bit 1 is the top wire
    GateKind kind = GateKind::even;
    std::optional<Matchgate> gate;
    std::optional<CharacterMatrix> matrix;

    size_t bit_width() const;
    /// Character matrix, computed from the gate when only the graph is given.
    CharacterMatrix character() const;
};

struct Matchcircuit {
    size_t bits = 1;
    std::vector<GatePlacement> placements;

    /// Max gate arity; 0 for the empty circuit.
    size_t level() const;
};

/// Identity-tensor embedding of a j-bit square matrix starting at bit
/// `start` of `total_bits`; bit 1 is most significant in the labels.
Matrix extend_matrix(const CharacterMatrix& m, size_t start, size_t total_bits);

/// Embedding of an even matrix acting on an arbitrary strictly-increasing
/// set of bit positions.
Matrix scatter_extend_matrix(const CharacterMatrix& m,
                             const std::vector<size_t>& positions,
                             size_t total_bits);

/// Ordered product of the tensor-extended gate matrices, left placement
/// first. Throws InvalidPlacement when validate_circuit reports violations.
Matrix circuit_matrix_product(const Matchcircuit& c);

struct CircuitGraph {
    SkewGraph graph;
    std::vector<size_t> inputs;     // node of bit b at inputs[b-1]
    std::vector<size_t> outputs;    // node of bit b at outputs[b-1]
    std::vector<size_t> omittable;  // union of the gates' omittable nodes
};

/// Left-to-right wiring of the circuit: m frontier nodes, gate instances
/// with fresh consecutive indices, and m terminal nodes. A connecting edge
/// carries −1 for each odd gate placed strictly below its bit since the
/// wire was last touched; everything else has weight 1.
CircuitGraph build_circuit_graph(const Matchcircuit& c);

/// Character of the circuit by the graph semantics: entry (Z) is
/// PfS(graph − Z) over the external nodes, with no modifier.
Matrix circuit_character_graph(const Matchcircuit& c);

/// Empty iff every placement fits on the wires and satisfies its declared
/// kind (diagonal matrix, even/odd parity, or prefix rule).
std::vector<std::string> validate_circuit(const Matchcircuit& c);

}  // namespace matchkit
