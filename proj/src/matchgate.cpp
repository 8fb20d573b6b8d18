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

#include "matchkit/matchgate.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "matchkit/errors.hpp"

namespace matchkit {

bool Matchgate::is_standard() const {
    return node_count() == bits_in() + bits_out() + 1 && omittable.size() == 1;
}

void Matchgate::validate() const {
    const size_t n = node_count();
    const size_t k = bits_in();
    const size_t l = bits_out();
    if (k + l > n) {
        throw Error("more external nodes than nodes");
    }
    for (size_t j = 0; j < k; ++j) {
        if (inputs[j] != j + 1) {
            throw Error("input nodes must be 1..k");
        }
    }
    for (size_t j = 0; j < l; ++j) {
        if (outputs[j] != n - l + 1 + j) {
            throw Error("output nodes must be n-l+1..n");
        }
    }
    std::set<size_t> ext(inputs.begin(), inputs.end());
    ext.insert(outputs.begin(), outputs.end());
    size_t prev = 0;
    for (size_t t : omittable) {
        graph.check_node(t);
        if (t <= prev) {
            throw Error("omittable nodes must be ascending");
        }
        prev = t;
        if (ext.count(t)) {
            throw Error("omittable node overlaps X or Y");
        }
    }
}

CharacterMatrix::CharacterMatrix(size_t bits_in, size_t bits_out, Matrix body)
    : bits_in_(bits_in), bits_out_(bits_out), body_(std::move(body)) {
    if (body_.rows() != (size_t{1} << bits_in_) || body_.cols() != (size_t{1} << bits_out_)) {
        throw DimensionMismatch("character matrix body must be 2^k x 2^l");
    }
}

std::string parity_name(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        default: return "mixed";
    }
}

Scalar modifier_x(size_t k, const std::vector<size_t>& zx) {
    size_t exponent = 0;
    size_t rank = 1;
    size_t prev = 0;
    for (size_t i : zx) {
        if (i <= prev || i > k) {
            throw Error("zx must be ascending within 1..k");
        }
        prev = i;
        exponent += i - rank;
        ++rank;
    }
    return Scalar(exponent % 2 == 0 ? 1 : -1);
}

Scalar modifier_y(size_t n, size_t l, const std::vector<size_t>& zy) {
    // Reflect i -> n+1-i and reuse the input-side closed form.
    std::vector<size_t> reflected;
    reflected.reserve(zy.size());
    for (auto it = zy.rbegin(); it != zy.rend(); ++it) {
        if (*it < n - l + 1 || *it > n) {
            throw Error("zy must lie within the output range");
        }
        reflected.push_back(n + 1 - *it);
    }
    return modifier_x(l, reflected);
}

Scalar modifier_overlap_diagnostic(const Matchgate& g, const std::vector<size_t>& z) {
    const size_t n = g.node_count();
    const size_t k = g.bits_in();
    const size_t min_y = n - g.bits_out() + 1;
    for (size_t t : g.omittable) {
        if (t <= k || t >= min_y) {
            throw Error("overlap diagnostic needs omittable nodes strictly between X and Y");
        }
    }
    std::set<size_t> zset(z.begin(), z.end());
    size_t exponent = 0;
    for (size_t x : z) {
        if (x <= k) {
            // matched survivors below an input: (x-1) minus deleted ones below
            size_t deleted_below = 0;
            for (size_t w : z) {
                if (w < x) ++deleted_below;
            }
            exponent += (x - 1) - deleted_below;
        } else {
            // matched survivors above an output
            size_t deleted_above = 0;
            for (size_t w : z) {
                if (w > x) ++deleted_above;
            }
            exponent += (n - x) - deleted_above;
        }
    }
    return Scalar(exponent % 2 == 0 ? 1 : -1);
}

std::vector<size_t> entry_deleted_nodes(size_t n, size_t k, size_t l, size_t row,
                                        size_t col) {
    std::vector<size_t> z;
    for (size_t j = 1; j <= k; ++j) {
        if (row & (size_t{1} << (k - j))) z.push_back(j);
    }
    for (size_t b = 0; b < l; ++b) {
        if (col & (size_t{1} << b)) z.push_back(n - l + 1 + b);
    }
    std::sort(z.begin(), z.end());
    return z;
}

Scalar character(const Matchgate& g, const std::vector<size_t>& z) {
    const size_t k = g.bits_in();
    const size_t n = g.node_count();
    const size_t l = g.bits_out();
    std::vector<size_t> sorted_z(z.begin(), z.end());
    std::sort(sorted_z.begin(), sorted_z.end());
    std::vector<size_t> zx, zy;
    for (size_t i : sorted_z) {
        if (i >= 1 && i <= k) {
            zx.push_back(i);
        } else if (i >= n - l + 1 && i <= n) {
            zy.push_back(i);
        } else {
            throw Error("Z must be a subset of X union Y");
        }
    }
    const Scalar mu = modifier_x(k, zx) * modifier_y(n, l, zy);

    const SkewGraph stripped = pf_delete(g.graph, sorted_z);
    // lambda = 1 exactly on surviving omittable nodes, renumbered.
    std::vector<int> lambda(stripped.node_count(), 0);
    for (size_t t : g.omittable) {
        size_t below = 0;
        for (size_t w : sorted_z) {
            if (w < t) ++below;
        }
        lambda[t - below - 1] = 1;
    }
    return mu * pf_sum(stripped, lambda);
}

CharacterMatrix character_matrix(const Matchgate& g) {
    g.validate();
    const size_t k = g.bits_in();
    const size_t l = g.bits_out();
    const size_t n = g.node_count();
    Matrix body(size_t{1} << k, size_t{1} << l);
    for (size_t r = 0; r < (size_t{1} << k); ++r) {
        for (size_t c = 0; c < (size_t{1} << l); ++c) {
            body.at(r, c) = character(g, entry_deleted_nodes(n, k, l, r, c));
        }
    }
    return CharacterMatrix(k, l, std::move(body));
}

bool is_edge_entry(size_t k, size_t l, size_t row, size_t col) {
    if (row >= (size_t{1} << k) || col >= (size_t{1} << l)) {
        throw IndexError("entry index out of range");
    }
    const size_t missing = (k - std::popcount(row)) + (l - std::popcount(col));
    return missing >= 1 && missing <= 2;
}

Parity parity_class(const Matrix& m) {
    bool any_even = false, any_odd = false;
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            if (m.at(r, c).is_zero()) continue;
            if ((std::popcount(r) + std::popcount(c)) % 2 == 0) {
                any_even = true;
            } else {
                any_odd = true;
            }
        }
    }
    if (any_even && any_odd) return Parity::mixed;
    if (any_odd) return Parity::odd;
    return Parity::even;  // includes the zero matrix
}

Parity parity_class(const CharacterMatrix& m) {
    return parity_class(m.body());
}

Matchgate compose_serial(const Matchgate& g1, const Matchgate& g2) {
    if (g1.bits_out() != g2.bits_in()) {
        throw DimensionMismatch("arity mismatch in serial composition");
    }
    const size_t n1 = g1.node_count();
    const size_t n2 = g2.node_count();
    const size_t l = g1.bits_out();
    Matchgate out;
    out.graph = SkewGraph(n1 + n2);
    for (size_t i = 1; i <= n1; ++i) {
        for (size_t j = i + 1; j <= n1; ++j) {
            const Scalar w = g1.graph.weight(i, j);
            if (!w.is_zero()) out.graph.set_weight(i, j, w);
        }
    }
    for (size_t i = 1; i <= n2; ++i) {
        for (size_t j = i + 1; j <= n2; ++j) {
            const Scalar w = g2.graph.weight(i, j);
            if (!w.is_zero()) out.graph.set_weight(n1 + i, n1 + j, w);
        }
    }
    // Output n1+1−j feeds input j, positionally.
    for (size_t j = 1; j <= l; ++j) {
        out.graph.set_weight(n1 + 1 - j, n1 + j, Scalar(1));
    }
    out.inputs = g1.inputs;
    for (size_t y : g2.outputs) out.outputs.push_back(n1 + y);
    out.omittable = g1.omittable;
    for (size_t t : g2.omittable) out.omittable.push_back(n1 + t);
    out.validate();
    return out;
}

}  // namespace matchkit
