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

#include "matchkit/pfaffian.hpp"

#include <algorithm>
#include <set>

#include "matchkit/errors.hpp"

namespace matchkit {

Scalar pairing_sign(const Pairing& p) {
    p.validate();
    size_t overlaps = 0;
    const auto& ps = p.pairs;
    for (size_t x = 0; x < ps.size(); ++x) {
        for (size_t y = x + 1; y < ps.size(); ++y) {
            const auto [a, b] = ps[x];
            const auto [c, d] = ps[y];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
                ++overlaps;
            }
        }
    }
    return Scalar(overlaps % 2 == 0 ? 1 : -1);
}

namespace {

void pf_definition_rec(const SkewGraph& g, std::vector<bool>& used, size_t next,
                       Pairing& partial, Scalar& total) {
    const size_t n = g.node_count();
    while (next <= n && used[next]) ++next;
    if (next > n) {
        Scalar monomial(1);
        for (const auto& [a, b] : partial.pairs) {
            monomial *= g.weight(a, b);
        }
        total += pairing_sign(partial) * monomial;
        return;
    }
    used[next] = true;
    for (size_t j = next + 1; j <= n; ++j) {
        if (used[j] || !g.has_edge(next, j)) continue;
        used[j] = true;
        partial.pairs.emplace_back(next, j);
        pf_definition_rec(g, used, next + 1, partial, total);
        partial.pairs.pop_back();
        used[j] = false;
    }
    used[next] = false;
}

}  // namespace

Scalar pf_definition(const SkewGraph& g) {
    const size_t n = g.node_count();
    if (n == 0) return Scalar(1);
    if (n % 2 == 1) return Scalar(0);
    std::vector<bool> used(n + 1, false);
    Pairing partial;
    Scalar total(0);
    pf_definition_rec(g, used, 1, partial, total);
    return total;
}

namespace {

// One step of skew congruence elimination. With the pair (p,q) cleared
// against every other active row, Pf factors as
//   Pf(M) = (−1)^{#active nodes strictly between p and q} · M(p,q) · Pf(rest).
struct SkewEliminator {
    size_t n;
    std::vector<Scalar> m;      // dense n×n, 0-based
    std::vector<bool> active;

    explicit SkewEliminator(size_t n_) : n(n_), m(n_ * n_), active(n_, true) {}

    Scalar& at(size_t r, size_t c) { return m[r * n + c]; }
    const Scalar& at(size_t r, size_t c) const { return m[r * n + c]; }

    // Eliminates the pair (p,q); returns the Pfaffian factor it contributes.
    Scalar eliminate_pair(size_t p, size_t q) {
        const Scalar val = at(p, q);
        size_t between = 0;
        for (size_t x = p + 1; x < q; ++x) {
            if (active[x]) ++between;
        }
        for (size_t r = 0; r < n; ++r) {
            if (!active[r] || r == p || r == q) continue;
            const Scalar a = at(r, p);  // coefficient against row q
            const Scalar b = at(r, q);  // coefficient against row p
            if (a.is_zero() && b.is_zero()) continue;
            for (size_t s = r + 1; s < n; ++s) {
                if (!active[s] || s == p || s == q) continue;
                // M'(r,s) = M(r,s) + (M(r,q)·M(s,p) − M(r,p)·M(s,q)) / val
                Scalar delta = (b * at(s, p) - a * at(s, q)) / val;
                if (delta.is_zero()) continue;
                at(r, s) += delta;
                at(s, r) -= delta;
            }
        }
        active[p] = false;
        active[q] = false;
        return (between % 2 == 0) ? val : -val;
    }
};

}  // namespace

Scalar pf_eliminate(const SkewGraph& g) {
    const size_t n = g.node_count();
    if (n == 0) return Scalar(1);
    if (n % 2 == 1) return Scalar(0);
    SkewEliminator e(n);
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j <= n; ++j) {
            if (i != j) e.at(i - 1, j - 1) = g.entry(i, j);
        }
    }
    Scalar result(1);
    for (size_t p = 0; p < n; ++p) {
        if (!e.active[p]) continue;
        size_t q = p + 1;
        while (q < n && (!e.active[q] || e.at(p, q).is_zero())) ++q;
        if (q == n) return Scalar(0);  // row p has no partner left
        result *= e.eliminate_pair(p, q);
    }
    return result;
}

SkewGraph pf_delete(const SkewGraph& g, const std::vector<size_t>& drop) {
    const size_t n = g.node_count();
    std::set<size_t> gone;
    for (size_t i : drop) {
        g.check_node(i);
        gone.insert(i);
    }
    std::vector<size_t> keep;
    for (size_t i = 1; i <= n; ++i) {
        if (!gone.count(i)) keep.push_back(i);
    }
    SkewGraph out(keep.size());
    for (size_t a = 0; a < keep.size(); ++a) {
        for (size_t b = a + 1; b < keep.size(); ++b) {
            const Scalar w = g.weight(keep[a], keep[b]);
            if (!w.is_zero()) out.set_weight(a + 1, b + 1, w);
        }
    }
    return out;
}

Scalar pf_sum(const SkewGraph& g, const std::vector<int>& lambda) {
    const size_t n = g.node_count();
    if (lambda.size() != n) {
        throw DimensionMismatch("lambda length must equal node count");
    }
    std::vector<size_t> ones;
    for (size_t i = 1; i <= n; ++i) {
        if (lambda[i - 1] != 0 && lambda[i - 1] != 1) {
            throw Error("lambda entries must be 0 or 1");
        }
        if (lambda[i - 1] == 1) ones.push_back(i);
    }
    Scalar total(0);
    const size_t subsets = size_t{1} << ones.size();
    for (size_t mask = 0; mask < subsets; ++mask) {
        std::vector<size_t> drop;
        for (size_t b = 0; b < ones.size(); ++b) {
            if (mask & (size_t{1} << b)) drop.push_back(ones[b]);
        }
        total += pf_eliminate(pf_delete(g, drop));
    }
    return total;
}

namespace {

void matchings_rec(const SkewGraph& g, const std::vector<bool>& required,
                   std::vector<bool>& used, size_t next, Pairing& partial,
                   std::vector<MatchingTerm>& out) {
    const size_t n = g.node_count();
    while (next <= n && used[next]) ++next;
    if (next > n) {
        Scalar monomial(1);
        for (const auto& [a, b] : partial.pairs) {
            monomial *= g.weight(a, b);
        }
        out.push_back({partial, monomial});
        return;
    }
    if (!required[next]) {
        used[next] = true;
        matchings_rec(g, required, used, next + 1, partial, out);
        used[next] = false;
    }
    used[next] = true;
    for (size_t j = next + 1; j <= n; ++j) {
        if (used[j] || !g.has_edge(next, j)) continue;
        used[j] = true;
        partial.pairs.emplace_back(next, j);
        matchings_rec(g, required, used, next + 1, partial, out);
        partial.pairs.pop_back();
        used[j] = false;
    }
    used[next] = false;
}

}  // namespace

std::vector<MatchingTerm> enumerate_matchings(const SkewGraph& g,
                                              const std::vector<size_t>& required) {
    const size_t n = g.node_count();
    std::vector<bool> req(n + 1, false);
    for (size_t i : required) {
        g.check_node(i);
        req[i] = true;
    }
    std::vector<bool> used(n + 1, false);
    Pairing partial;
    std::vector<MatchingTerm> out;
    matchings_rec(g, req, used, 1, partial, out);
    return out;
}

PfsEvaluator::PfsEvaluator(const SkewGraph& g, std::vector<size_t> externals,
                           std::vector<size_t> omittables) {
    n_ = g.node_count();
    std::vector<int> role(n_ + 1, 0);  // 0 internal, 1 external, 2 omittable
    for (size_t i : externals) {
        g.check_node(i);
        role[i] = 1;
    }
    for (size_t i : omittables) {
        g.check_node(i);
        if (role[i] != 0) throw Error("node cannot be both external and omittable");
        role[i] = 2;
    }

    SkewEliminator e(n_);
    for (size_t i = 1; i <= n_; ++i) {
        for (size_t j = 1; j <= n_; ++j) {
            if (i != j) e.at(i - 1, j - 1) = g.entry(i, j);
        }
    }

    // Pivot pairs are restricted to internal nodes; externals and omittables
    // must survive so that deleting them later commutes with the elimination.
    factor_ = Scalar(1);
    std::vector<std::pair<size_t, size_t>> pivots;
    while (true) {
        bool found = false;
        for (size_t p = 0; p < n_ && !found; ++p) {
            if (!e.active[p] || role[p + 1] != 0) continue;
            for (size_t q = p + 1; q < n_; ++q) {
                if (!e.active[q] || role[q + 1] != 0 || e.at(p, q).is_zero()) continue;
                factor_ *= e.eliminate_pair(p, q);
                pivots.emplace_back(p, q);
                found = true;
                break;
            }
        }
        if (!found) break;
    }

    residual_pos_.assign(n_ + 1, -1);
    for (size_t i = 0; i < n_; ++i) {
        if (e.active[i]) {
            residual_pos_[i + 1] = static_cast<int>(residual_ids_.size());
            residual_ids_.push_back(i + 1);
        }
    }
    const size_t m = residual_ids_.size();
    residual_.assign(m * m, Scalar(0));
    for (size_t a = 0; a < m; ++a) {
        for (size_t b = 0; b < m; ++b) {
            residual_[a * m + b] = e.at(residual_ids_[a] - 1, residual_ids_[b] - 1);
        }
    }
    flip_.assign(m, 1);
    for (size_t a = 0; a < m; ++a) {
        const size_t id = residual_ids_[a];
        size_t spans = 0;
        for (const auto& [p, q] : pivots) {
            if (p + 1 < id && id < q + 1) ++spans;
        }
        flip_[a] = (spans % 2 == 0) ? 1 : -1;
    }
    for (size_t i : omittables) {
        omit_pos_.push_back(static_cast<size_t>(residual_pos_[i]));
    }
}

Scalar PfsEvaluator::eval(const std::vector<size_t>& deleted_externals) const {
    const size_t m = residual_ids_.size();
    std::vector<bool> base_gone(m, false);
    int base_flip = 1;
    for (size_t id : deleted_externals) {
        if (id < 1 || id > n_ || residual_pos_[id] < 0) {
            throw IndexError("deleted node is not an external of this evaluator");
        }
        const size_t pos = static_cast<size_t>(residual_pos_[id]);
        base_gone[pos] = true;
        base_flip *= flip_[pos];
    }

    Scalar total(0);
    const size_t subsets = size_t{1} << omit_pos_.size();
    for (size_t mask = 0; mask < subsets; ++mask) {
        std::vector<bool> gone = base_gone;
        int sign = base_flip;
        for (size_t b = 0; b < omit_pos_.size(); ++b) {
            if (mask & (size_t{1} << b)) {
                gone[omit_pos_[b]] = true;
                sign *= flip_[omit_pos_[b]];
            }
        }
        // Pfaffian of the residual with the requested rows dropped.
        std::vector<size_t> keep;
        for (size_t a = 0; a < m; ++a) {
            if (!gone[a]) keep.push_back(a);
        }
        if (keep.size() % 2 == 1) continue;
        SkewEliminator e(keep.size());
        for (size_t a = 0; a < keep.size(); ++a) {
            for (size_t b = 0; b < keep.size(); ++b) {
                e.at(a, b) = residual_[keep[a] * m + keep[b]];
            }
        }
        Scalar pf(1);
        bool dead = false;
        for (size_t p = 0; p < keep.size() && !dead; ++p) {
            if (!e.active[p]) continue;
            size_t q = p + 1;
            while (q < keep.size() && (!e.active[q] || e.at(p, q).is_zero())) ++q;
            if (q == keep.size()) {
                dead = true;
                break;
            }
            pf *= e.eliminate_pair(p, q);
        }
        if (dead) continue;
        total += (sign > 0) ? pf : -pf;
    }
    return factor_ * total;
}

}  // namespace matchkit
