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

#include "matchkit/matchcircuit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "matchkit/errors.hpp"
#include "matchkit/realization.hpp"

namespace matchkit {

std::string gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::diagonal: return "diagonal";
        case GateKind::even: return "even";
        case GateKind::odd: return "odd";
        default: return "prefix";
    }
}

GateKind gate_kind_from_name(const std::string& name) {
    if (name == "diagonal") return GateKind::diagonal;
    if (name == "even") return GateKind::even;
    if (name == "odd") return GateKind::odd;
    if (name == "prefix") return GateKind::prefix_arbitrary;
    throw ParseError("unknown gate kind \"" + name + "\"");
}

size_t GatePlacement::bit_width() const {
    if (gate) return gate->bits_in();
    if (matrix) return matrix->bits_in();
    throw InvalidPlacement("placement has neither gate nor matrix");
}

CharacterMatrix GatePlacement::character() const {
    if (matrix) return *matrix;
    if (gate) return character_matrix(*gate);
    throw InvalidPlacement("placement has neither gate nor matrix");
}

size_t Matchcircuit::level() const {
    size_t lvl = 0;
    for (const auto& p : placements) {
        lvl = std::max(lvl, p.bit_width());
    }
    return lvl;
}

Matrix extend_matrix(const CharacterMatrix& m, size_t start, size_t total_bits) {
    if (m.bits_in() != m.bits_out()) {
        throw DimensionMismatch("extension needs a square gate matrix");
    }
    const size_t j = m.bits_in();
    if (start < 1 || start + j - 1 > total_bits) {
        throw IndexError("gate does not fit on the requested bits");
    }
    const size_t dim = size_t{1} << total_bits;
    // Bit b of the circuit is bit position (total_bits - b) from the LSB.
    const size_t shift = total_bits - (start + j - 1);
    const size_t slice_mask = ((size_t{1} << j) - 1) << shift;
    Matrix out(dim, dim);
    for (size_t u = 0; u < dim; ++u) {
        const size_t rest = u & ~slice_mask;
        const size_t ru = (u & slice_mask) >> shift;
        for (size_t rv = 0; rv < (size_t{1} << j); ++rv) {
            const Scalar& val = m.at(ru, rv);
            if (val.is_zero()) continue;
            out.at(u, rest | (rv << shift)) = val;
        }
    }
    return out;
}

Matrix scatter_extend_matrix(const CharacterMatrix& m,
                             const std::vector<size_t>& positions,
                             size_t total_bits) {
    const size_t j = m.bits_in();
    if (m.bits_out() != j || positions.size() != j) {
        throw DimensionMismatch("positions must match a square gate matrix");
    }
    for (size_t t = 0; t < j; ++t) {
        if (positions[t] < 1 || positions[t] > total_bits ||
            (t > 0 && positions[t] <= positions[t - 1])) {
            throw IndexError("positions must be strictly increasing within range");
        }
    }
    const size_t dim = size_t{1} << total_bits;
    size_t mask = 0;
    for (size_t p : positions) mask |= size_t{1} << (total_bits - p);
    auto gather = [&](size_t u) {
        size_t g = 0;
        for (size_t t = 0; t < j; ++t) {
            if (u & (size_t{1} << (total_bits - positions[t]))) {
                g |= size_t{1} << (j - 1 - t);
            }
        }
        return g;
    };
    Matrix out(dim, dim);
    for (size_t u = 0; u < dim; ++u) {
        for (size_t v = 0; v < dim; ++v) {
            if ((u & ~mask) != (v & ~mask)) continue;
            out.at(u, v) = m.at(gather(u), gather(v));
        }
    }
    return out;
}

std::vector<std::string> validate_circuit(const Matchcircuit& c) {
    std::vector<std::string> violations;
    if (c.bits < 1) {
        violations.push_back("circuit must have at least one bit");
        return violations;
    }
    for (size_t idx = 0; idx < c.placements.size(); ++idx) {
        const auto& p = c.placements[idx];
        const std::string where = "placement " + std::to_string(idx);
        if (!p.gate && !p.matrix) {
            violations.push_back(where + ": no gate or matrix");
            continue;
        }
        CharacterMatrix cm = p.character();
        if (cm.bits_in() != cm.bits_out()) {
            violations.push_back(where + ": circuit gates must be square");
            continue;
        }
        if (p.gate && p.matrix && !(character_matrix(*p.gate) == *p.matrix)) {
            violations.push_back(where + ": gate and matrix disagree");
        }
        const size_t j = cm.bits_in();
        if (p.start_bit < 1 || p.start_bit + j - 1 > c.bits) {
            violations.push_back(where + ": does not fit on " +
                                 std::to_string(c.bits) + " bits");
            continue;
        }
        const Parity par = parity_class(cm);
        switch (p.kind) {
            case GateKind::diagonal:
                if (!cm.body().is_diagonal()) {
                    violations.push_back(where + ": declared diagonal but is not");
                }
                break;
            case GateKind::even:
                if (par != Parity::even) {
                    violations.push_back(where + ": declared even but is " +
                                         parity_name(par));
                }
                break;
            case GateKind::odd:
                if (par != Parity::odd) {
                    violations.push_back(where + ": declared odd but is " +
                                         parity_name(par));
                }
                break;
            case GateKind::prefix_arbitrary:
                if (p.start_bit != 1) {
                    violations.push_back(where + ": arbitrary gates must start at bit 1");
                }
                break;
        }
    }
    return violations;
}

namespace {

void require_valid(const Matchcircuit& c) {
    auto violations = validate_circuit(c);
    if (!violations.empty()) {
        throw InvalidPlacement(violations.front());
    }
}

/// Sign of the modifier for the deleted-bit set encoded by a label.
Scalar nu_sign(size_t label, size_t m) {
    std::vector<size_t> bits;
    for (size_t b = 1; b <= m; ++b) {
        if (label & (size_t{1} << (m - b))) bits.push_back(b);
    }
    return modifier_x(m, bits);
}

/// diag(nu) * a * diag(nu).
Matrix nu_conjugate(const Matrix& a, size_t m) {
    Matrix out = a;
    for (size_t u = 0; u < out.rows(); ++u) {
        const Scalar ru = nu_sign(u, m);
        for (size_t v = 0; v < out.cols(); ++v) {
            if (out.at(u, v).is_zero()) continue;
            out.at(u, v) = ru * nu_sign(v, m) * out.at(u, v);
        }
    }
    return out;
}

/// m-bit identity gate: unit pair on every bit.
Matchgate identity_gate(size_t m) {
    Matchgate g;
    g.graph = SkewGraph(2 * m);
    for (size_t b = 1; b <= m; ++b) {
        g.inputs.push_back(b);
        g.outputs.push_back(m + b);
        g.graph.set_weight(b, 2 * m + 1 - b, Scalar(1));
    }
    g.validate();
    return g;
}

/// Gate block realizing one placement inside the circuit graph. Dropping
/// the modifier turns the character of a gate chain into
/// nu · (product of the pieces' characters) · nu, so each placement
/// contributes a gate whose character is the nu-conjugated tensor extension
/// of its matrix; the conjugations telescope and the Pfaffian-Sum table of
/// the whole graph is exactly the product of the extensions. The signs the
/// parallel-edge rule would put on wires crossing odd gates live inside
/// these blocks. Realizations are cached; the same catalog gates recur in
/// circuit after circuit.
Matchgate placement_block(const GatePlacement& p, size_t m) {
    static std::map<std::string, Matchgate> cache;
    const CharacterMatrix cm = p.character();
    std::ostringstream key;
    key << m << "|" << p.start_bit << "|" << cm.bits_in();
    for (size_t r = 0; r < cm.body().rows(); ++r) {
        for (size_t c = 0; c < cm.body().cols(); ++c) {
            if (!cm.at(r, c).is_zero()) {
                key << "|" << r << "," << c << "," << cm.at(r, c).str();
            }
        }
    }
    auto it = cache.find(key.str());
    if (it != cache.end()) return it->second;

    const Matrix target = nu_conjugate(extend_matrix(cm, p.start_bit, m), m);
    std::vector<Matchgate> chain = realize(target);
    Matchgate block = chain[0];
    for (size_t i = 1; i < chain.size(); ++i) {
        block = compose_serial(block, chain[i]);
    }
    cache.emplace(key.str(), block);
    return block;
}

}  // namespace

Matrix circuit_matrix_product(const Matchcircuit& c) {
    require_valid(c);
    Matrix acc = Matrix::identity(size_t{1} << c.bits);
    for (const auto& p : c.placements) {
        acc = acc * extend_matrix(p.character(), p.start_bit, c.bits);
    }
    return acc;
}

CircuitGraph build_circuit_graph(const Matchcircuit& c) {
    require_valid(c);
    const size_t m = c.bits;
    Matchgate acc = identity_gate(m);
    for (const auto& p : c.placements) {
        acc = compose_serial(acc, placement_block(p, m));
    }
    CircuitGraph out;
    out.graph = acc.graph;
    const size_t n = acc.node_count();
    for (size_t b = 1; b <= m; ++b) {
        out.inputs.push_back(b);
        out.outputs.push_back(n + 1 - b);
    }
    out.omittable = acc.omittable;
    return out;
}

Matrix circuit_character_graph(const Matchcircuit& c) {
    const CircuitGraph cg = build_circuit_graph(c);
    const size_t m = c.bits;
    std::vector<size_t> externals = cg.inputs;
    externals.insert(externals.end(), cg.outputs.begin(), cg.outputs.end());
    PfsEvaluator eval(cg.graph, externals, cg.omittable);
    const size_t dim = size_t{1} << m;
    Matrix out(dim, dim);
    for (size_t r = 0; r < dim; ++r) {
        for (size_t col = 0; col < dim; ++col) {
            std::vector<size_t> deleted;
            for (size_t b = 1; b <= m; ++b) {
                if (r & (size_t{1} << (m - b))) deleted.push_back(cg.inputs[b - 1]);
                if (col & (size_t{1} << (m - b))) deleted.push_back(cg.outputs[b - 1]);
            }
            out.at(r, col) = eval.eval(deleted);
        }
    }
    return out;
}

}  // namespace matchkit
