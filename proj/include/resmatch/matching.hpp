#pragma once

// Maximum matchings: Hopcroft-Karp for bipartite graphs, an exact
// branch-and-bound oracle for general graphs at desk scale, enumeration of
// all maximum matchings in lexicographic order, and forced-edge analysis.
//
// Budgets are explicit and failures are loud; nothing here approximates.

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "resmatch/graph.hpp"
#include "resmatch/limits.hpp"

namespace resmatch {

using Matching = std::vector<Edge>;  // kept sorted and normalized

class InvalidMatchingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_matching(const Graph& g, const Matching& m) {
    std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);
    for (const Edge& e : m) {
        if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v))
            return false;
        if (used[static_cast<size_t>(e.u)] || used[static_cast<size_t>(e.v)])
            return false;
        used[static_cast<size_t>(e.u)] = used[static_cast<size_t>(e.v)] = true;
    }
    return true;
}

inline Matching normalized(Matching m) {
    std::sort(m.begin(), m.end());
    return m;
}

// ---------------------------------------------------------------------------
// Hopcroft-Karp on an explicit bipartition.

inline void validate_bipartition(const Graph& g, const Bipartition& sides) {
    std::vector<int> side(static_cast<size_t>(g.vertex_count()), -1);
    for (VertexId v : sides.side0) side.at(static_cast<size_t>(v)) = 0;
    for (VertexId v : sides.side1) {
        if (side.at(static_cast<size_t>(v)) == 0)
            throw GraphError("bipartition sides overlap at vertex " + std::to_string(v));
        side[static_cast<size_t>(v)] = 1;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (side[static_cast<size_t>(v)] == -1)
            throw GraphError("bipartition misses vertex " + std::to_string(v));
    for (const Edge& e : g.edges())
        if (side[static_cast<size_t>(e.u)] == side[static_cast<size_t>(e.v)])
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") does not cross the bipartition");
}

inline Matching max_matching_bipartite(const Graph& g, const Bipartition& sides) {
    validate_bipartition(g, sides);
    const int n = g.vertex_count();
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<VertexId> match(static_cast<size_t>(n), -1);
    std::vector<int> dist(static_cast<size_t>(n), kInf);
    const std::vector<VertexId>& left = sides.side0;

    auto bfs = [&]() {
        std::queue<VertexId> q;
        for (VertexId u : left) {
            if (match[static_cast<size_t>(u)] == -1) {
                dist[static_cast<size_t>(u)] = 0;
                q.push(u);
            } else {
                dist[static_cast<size_t>(u)] = kInf;
            }
        }
        bool reachable_free = false;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId w : g.neighbors(u)) {
                VertexId u2 = match[static_cast<size_t>(w)];
                if (u2 == -1) {
                    reachable_free = true;
                } else if (dist[static_cast<size_t>(u2)] == kInf) {
                    dist[static_cast<size_t>(u2)] = dist[static_cast<size_t>(u)] + 1;
                    q.push(u2);
                }
            }
        }
        return reachable_free;
    };
    std::function<bool(VertexId)> dfs = [&](VertexId u) {
        for (VertexId w : g.neighbors(u)) {
            VertexId u2 = match[static_cast<size_t>(w)];
            if (u2 == -1 ||
                (dist[static_cast<size_t>(u2)] == dist[static_cast<size_t>(u)] + 1 && dfs(u2))) {
                match[static_cast<size_t>(w)] = u;
                match[static_cast<size_t>(u)] = w;
                return true;
            }
        }
        dist[static_cast<size_t>(u)] = kInf;
        return false;
    };

    while (bfs()) {
        for (VertexId u : left)
            if (match[static_cast<size_t>(u)] == -1)
                dfs(u);
    }
    Matching out;
    for (VertexId u : left)
        if (match[static_cast<size_t>(u)] != -1)
            out.emplace_back(u, match[static_cast<size_t>(u)]);
    return normalized(std::move(out));
}

// ---------------------------------------------------------------------------
// Exact general-graph oracle: exhaustive branch on the lowest free vertex
// with pruning. Intended for desk scale; the node budget fails loudly.

namespace detail {

class BranchBound {
public:
    BranchBound(const Graph& g, const SearchLimits& limits)
        : g_(g), limits_(limits), state_(static_cast<size_t>(g.vertex_count()), Free) {}

    int run() {
        rec(0);
        return best_;
    }

private:
    enum State : unsigned char { Free, Covered, Skipped };

    bool eligible(VertexId v) const {
        if (state_[static_cast<size_t>(v)] != Free)
            return false;
        for (VertexId w : g_.neighbors(v))
            if (state_[static_cast<size_t>(w)] == Free)
                return true;
        return false;
    }

    int upper_bound() const {
        int candidates = 0;
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            if (eligible(v))
                ++candidates;
        return candidates / 2;
    }

    void rec(int cur) {
        if (++nodes_ > limits_.nodes)
            throw BudgetExceededError("matching search budget exceeded after " +
                                      std::to_string(nodes_) + " nodes");
        best_ = std::max(best_, cur);
        if (cur + upper_bound() <= best_)
            return;
        VertexId v = -1;
        for (VertexId c = 0; c < g_.vertex_count(); ++c)
            if (eligible(c)) {
                v = c;
                break;
            }
        if (v == -1)
            return;
        for (VertexId w : g_.neighbors(v)) {
            if (state_[static_cast<size_t>(w)] != Free)
                continue;
            state_[static_cast<size_t>(v)] = state_[static_cast<size_t>(w)] = Covered;
            rec(cur + 1);
            state_[static_cast<size_t>(v)] = state_[static_cast<size_t>(w)] = Free;
        }
        state_[static_cast<size_t>(v)] = Skipped;
        rec(cur);
        state_[static_cast<size_t>(v)] = Free;
    }

    const Graph& g_;
    const SearchLimits& limits_;
    std::vector<State> state_;
    int best_ = 0;
    long long nodes_ = 0;
};

}  // namespace detail

inline int max_matching_size(const Graph& g, const SearchLimits& limits = {}) {
    return detail::BranchBound(g, limits).run();
}

// Fast exact matching number: Hopcroft-Karp when the graph is bipartite,
// branch and bound otherwise.
inline int matching_number(const Graph& g, const SearchLimits& limits = {}) {
    if (auto sides = bipartition_of(g))
        return static_cast<int>(max_matching_bipartite(g, *sides).size());
    return max_matching_size(g, limits);
}

inline void require_maximum_matching(const Graph& g, const Matching& m,
                                     const SearchLimits& limits = {}) {
    if (!is_matching(g, m))
        throw InvalidMatchingError("edge set is not a matching of the host graph");
    int beta = matching_number(g, limits);
    if (static_cast<int>(m.size()) != beta)
        throw InvalidMatchingError("matching has size " + std::to_string(m.size()) +
                                   " but beta = " + std::to_string(beta));
}

// ---------------------------------------------------------------------------
// Enumeration of all maximum matchings, lexicographic by sorted edge list.
//
// Branches on the lowest free vertex: matching it to each free neighbor in
// ascending order and then leaving it unmatched, recursing only into
// branches that a matching-number feasibility check proves can still reach
// beta(g). Every branch explored therefore yields at least one matching.

namespace detail {

template <typename Fn>
class MaxMatchingEnumerator {
public:
    MaxMatchingEnumerator(const Graph& g, const SearchLimits& limits, Fn& fn)
        : g_(g), limits_(limits), fn_(fn),
          state_(static_cast<size_t>(g.vertex_count()), Free) {}

    void run() {
        target_ = matching_number(g_, limits_);
        rec();
    }

private:
    enum State : unsigned char { Free, Covered, Skipped };

    // Matching number of the subgraph induced by free vertices.
    int free_beta() {
        std::vector<VertexId> map(static_cast<size_t>(g_.vertex_count()), -1);
        std::vector<VertexId> verts;
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            if (state_[static_cast<size_t>(v)] == Free) {
                map[static_cast<size_t>(v)] = static_cast<VertexId>(verts.size());
                verts.push_back(v);
            }
        std::vector<Edge> edges;
        for (const Edge& e : g_.edges())
            if (map[static_cast<size_t>(e.u)] != -1 && map[static_cast<size_t>(e.v)] != -1)
                edges.emplace_back(map[static_cast<size_t>(e.u)], map[static_cast<size_t>(e.v)]);
        Graph sub(static_cast<int>(verts.size()), std::move(edges));
        return matching_number(sub, limits_);
    }

    void rec() {
        if (stopped_)
            return;
        if (++nodes_ > limits_.nodes)
            throw BudgetExceededError("matching enumeration budget exceeded");
        if (static_cast<int>(current_.size()) == target_) {
            stopped_ = !fn_(current_);
            return;
        }
        VertexId v = -1;
        for (VertexId c = 0; c < g_.vertex_count(); ++c)
            if (state_[static_cast<size_t>(c)] == Free) {
                v = c;
                break;
            }
        if (v == -1)
            return;
        const int needed = target_ - static_cast<int>(current_.size());
        for (VertexId w : g_.neighbors(v)) {
            if (stopped_)
                return;
            if (state_[static_cast<size_t>(w)] != Free)
                continue;
            state_[static_cast<size_t>(v)] = state_[static_cast<size_t>(w)] = Covered;
            if (free_beta() == needed - 1) {
                current_.emplace_back(v, w);
                rec();
                current_.pop_back();
            }
            state_[static_cast<size_t>(v)] = state_[static_cast<size_t>(w)] = Free;
        }
        if (stopped_)
            return;
        state_[static_cast<size_t>(v)] = Skipped;
        if (free_beta() == needed)
            rec();
        state_[static_cast<size_t>(v)] = Free;
    }

    const Graph& g_;
    const SearchLimits& limits_;
    Fn& fn_;
    std::vector<State> state_;
    Matching current_;
    int target_ = 0;
    long long nodes_ = 0;
    bool stopped_ = false;
};

}  // namespace detail

// Calls fn for every maximum matching in lexicographic order; fn returns
// false to stop early.
template <typename Fn>
void visit_max_matchings(const Graph& g, Fn fn, const SearchLimits& limits = {}) {
    detail::MaxMatchingEnumerator<Fn> e(g, limits, fn);
    e.run();
}

inline std::vector<Matching> enumerate_max_matchings(const Graph& g, size_t limit,
                                                     const SearchLimits& limits = {}) {
    std::vector<Matching> out;
    bool overflow = false;
    visit_max_matchings(
        g,
        [&](const Matching& m) {
            if (out.size() == limit) {
                overflow = true;
                return false;
            }
            out.push_back(m);
            return true;
        },
        limits);
    if (overflow)
        throw EnumerationLimitError("more than " + std::to_string(limit) +
                                    " maximum matchings exist");
    return out;
}

// Edges contained in every maximum matching: e is forced iff removing it
// lowers the matching number.
inline std::vector<Edge> forced_edges(const Graph& g, const SearchLimits& limits = {}) {
    int beta = matching_number(g, limits);
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (matching_number(g.without_edge(e), limits) < beta)
            out.push_back(e);
    return out;
}

}  // namespace resmatch
