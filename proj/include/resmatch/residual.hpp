#pragma once

// The residual matching number beta(G\F) over maximum matchings F:
// optimization and decision variants by enumeration, plus closed forms for
// paths, cycles, graphs of max degree two, and regular bipartite graphs.

#include <algorithm>
#include <optional>
#include <vector>

#include "resmatch/graph.hpp"
#include "resmatch/matching.hpp"

namespace resmatch {

struct ResidualSummary {
    int beta = 0;
    int min_residual = 0;
    int max_residual = 0;
    Matching min_witness;
    Matching max_witness;
};

// beta of (V, E \ f) where f must be a maximum matching of g.
inline int residual_after(const Graph& g, const Matching& f, const SearchLimits& limits = {}) {
    require_maximum_matching(g, f, limits);
    return matching_number(g.without_edges(f), limits);
}

namespace detail {

// f is known to be a maximum matching; skips re-verification.
inline int residual_after_unchecked(const Graph& g, const Matching& f,
                                    const SearchLimits& limits) {
    return matching_number(g.without_edges(f), limits);
}

}  // namespace detail

struct ResidualWitness {
    int value = 0;
    Matching witness;
};

// Maximum of beta(G\F) over all maximum matchings F, with the first
// witness in enumeration order that attains it.
inline ResidualWitness max_residual(const Graph& g, const SearchLimits& limits = {}) {
    ResidualWitness best{-1, {}};
    visit_max_matchings(
        g,
        [&](const Matching& f) {
            int r = detail::residual_after_unchecked(g, f, limits);
            if (r > best.value) {
                best.value = r;
                best.witness = f;
            }
            return true;
        },
        limits);
    if (best.value < 0)
        best = ResidualWitness{0, {}};  // unreachable: the empty matching always exists
    return best;
}

inline ResidualWitness min_residual(const Graph& g, const SearchLimits& limits = {}) {
    ResidualWitness best{-1, {}};
    visit_max_matchings(
        g,
        [&](const Matching& f) {
            int r = detail::residual_after_unchecked(g, f, limits);
            if (best.value < 0 || r < best.value) {
                best.value = r;
                best.witness = f;
            }
            return true;
        },
        limits);
    if (best.value < 0)
        best = ResidualWitness{0, {}};
    return best;
}

struct Decision {
    bool answer = false;
    // First maximum matching in enumeration order witnessing a yes.
    std::optional<Matching> witness;
    int value = 0;  // its residual
};

// Does some maximum matching F have beta(G\F) >= k? k = 0 is a trivial yes.
inline Decision decide_ge(const Graph& g, int k, const SearchLimits& limits = {}) {
    Decision d;
    if (k <= 0) {
        d.answer = true;
        return d;
    }
    visit_max_matchings(
        g,
        [&](const Matching& f) {
            int r = detail::residual_after_unchecked(g, f, limits);
            if (r >= k) {
                d.answer = true;
                d.witness = f;
                d.value = r;
                return false;
            }
            return true;
        },
        limits);
    return d;
}

inline Decision decide_le(const Graph& g, int k, const SearchLimits& limits = {}) {
    Decision d;
    visit_max_matchings(
        g,
        [&](const Matching& f) {
            int r = detail::residual_after_unchecked(g, f, limits);
            if (r <= k) {
                d.answer = true;
                d.witness = f;
                d.value = r;
                return false;
            }
            return true;
        },
        limits);
    return d;
}

// Full summary in a single enumeration sweep.
inline ResidualSummary residual_summary(const Graph& g, const SearchLimits& limits = {}) {
    ResidualSummary s;
    s.beta = matching_number(g, limits);
    s.min_residual = -1;
    s.max_residual = -1;
    visit_max_matchings(
        g,
        [&](const Matching& f) {
            int r = detail::residual_after_unchecked(g, f, limits);
            if (s.min_residual < 0 || r < s.min_residual) {
                s.min_residual = r;
                s.min_witness = f;
            }
            if (r > s.max_residual) {
                s.max_residual = r;
                s.max_witness = f;
            }
            return true;
        },
        limits);
    if (s.min_residual < 0)
        s.min_residual = s.max_residual = 0;
    return s;
}

// ---------------------------------------------------------------------------
// Closed forms.
//
//   P_{2k}:   beta = k, max = k, min = k-1 for k >= 2 (min = k at k <= 1)
//   P_{2k+1}: beta = k+1, min = max = k (unique maximum matching)
//   C_n:      beta = floor(n/2), min = max = floor(n/2)
//   max degree <= 2: componentwise sums
//   r-regular bipartite, r >= 2: min = max = |V|/2
//
// Witnesses are constructed explicitly; edges are named along the component
// traversal, e_i joining the (i-1)-th and i-th vertex.

namespace detail {

struct ComponentResidual {
    int beta = 0;
    int min = 0;
    int max = 0;
    Matching min_witness;
    Matching max_witness;
};

inline ComponentResidual path_component_residual(const std::vector<VertexId>& order) {
    ComponentResidual r;
    int edges = static_cast<int>(order.size()) - 1;
    auto edge_at = [&](int i) {  // 1-based e_i
        return Edge(order[static_cast<size_t>(i - 1)], order[static_cast<size_t>(i)]);
    };
    if (edges <= 0)
        return r;
    if (edges % 2 == 1) {
        // P_{2k+1}: the unique maximum matching takes the odd edges.
        int k = edges / 2;
        r.beta = k + 1;
        r.min = r.max = k;
        for (int i = 1; i <= edges; i += 2)
            r.max_witness.push_back(edge_at(i));
        r.min_witness = r.max_witness;
        return r;
    }
    int k = edges / 2;
    r.beta = k;
    r.max = k;
    for (int i = 1; i <= edges - 1; i += 2)
        r.max_witness.push_back(edge_at(i));  // odd edges leave the evens disjoint
    if (k >= 2) {
        r.min = k - 1;
        r.min_witness.push_back(edge_at(1));
        for (int i = 4; i <= edges; i += 2)
            r.min_witness.push_back(edge_at(i));
    } else {
        r.min = k;
        r.min_witness = r.max_witness;
    }
    return r;
}

inline ComponentResidual cycle_component_residual(const std::vector<VertexId>& order) {
    ComponentResidual r;
    int n = static_cast<int>(order.size());
    r.beta = n / 2;
    r.min = r.max = n / 2;
    for (int i = 0; i + 1 < n; i += 2)
        r.max_witness.emplace_back(order[static_cast<size_t>(i)], order[static_cast<size_t>(i + 1)]);
    r.min_witness = r.max_witness;
    return r;
}

}  // namespace detail

// Closed-form residual summary when the graph belongs to a special family;
// nullopt otherwise.
inline std::optional<ResidualSummary> special_case_residual(const Graph& g) {
    SpecialClass cls = classify_special(g);
    using Kind = SpecialClass::Kind;
    if (cls.kind == Kind::General)
        return std::nullopt;
    ResidualSummary s;
    if (cls.kind == Kind::RegularBipartite) {
        auto sides = bipartition_of(g);
        Matching f = max_matching_bipartite(g, *sides);
        s.beta = g.vertex_count() / 2;
        s.min_residual = s.max_residual = g.vertex_count() / 2;
        s.min_witness = s.max_witness = f;
        return s;
    }
    // Paths, cycles, and their disjoint unions: maximum matchings of a
    // disjoint union are unions of componentwise maximum matchings, so the
    // residual bounds add.
    for (const ComponentShape& shape : cls.component_shapes) {
        detail::ComponentResidual r = shape.is_cycle
                                          ? detail::cycle_component_residual(shape.order)
                                          : detail::path_component_residual(shape.order);
        s.beta += r.beta;
        s.min_residual += r.min;
        s.max_residual += r.max;
        s.min_witness.insert(s.min_witness.end(), r.min_witness.begin(), r.min_witness.end());
        s.max_witness.insert(s.max_witness.end(), r.max_witness.begin(), r.max_witness.end());
    }
    s.min_witness = normalized(std::move(s.min_witness));
    s.max_witness = normalized(std::move(s.max_witness));
    return s;
}

}  // namespace resmatch
