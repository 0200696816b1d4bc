#pragma once

// Executable constructions for the two NP-completeness reductions from
// Max E2-SAT to the residual matching problems on connected bipartite
// graphs with max degree three.
//
// Geometry per clause j (band y in [4j-3, 4j], Y = 4j-3):
//
//   x=-1 column      x=0 (thm 1)      gadget A (x0=2)        gadget B (x0=8)
//   s4 (-1,Y+3)      t2 (0,Y+3)
//   s3 (-1,Y+2)      t1 (0,Y+2)       d1(x0,Y+2) h1(x0+1,Y+2)   ... d2(x0+3,Y+2)
//   s2 (-1,Y+1)                       p3(x0+1,Y+1) p4(x0+2,Y+1) h2(x0+3,Y+1)
//   s1 (-1,Y)                         p1(x0,Y)  p2(x0+1,Y)
//
// Ports v11..v22 = p1..p4 form the induced path p1-p2-p3-p4 (pair, bridge,
// pair); u-pairs are (h1,d1), (h2,d2) with d1, d2 pendant, which forces the
// u-pairs into every perfect matching. Hub attachments: h1-p3 for a positive
// literal, h1-p1 for a negated one; h2-p4 always. Theorem 1 adds the x=0
// spine pair plus collector edges t1-h1 into both gadgets; theorem 2 instead
// joins A.h1 to a port of B chosen by the second literal's polarity (v11 if
// positive, v21 if negated). Each block hangs off the x=-1 column through
// one anchor edge A.h2-s3. Variable cycles route p4 -> next occurrence's p1.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resmatch/e2sat.hpp"
#include "resmatch/graph.hpp"
#include "resmatch/matching.hpp"
#include "resmatch/residual.hpp"

namespace resmatch {

class ReductionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class TheoremId { theorem1 = 1, theorem2 = 2 };

enum class VertexRole { Spine, UBlock, Port };

struct PairGadget {
    bool negated = false;
    VertexId v11 = -1, v12 = -1, v21 = -1, v22 = -1;  // ports
    VertexId u11 = -1, u12 = -1, u21 = -1, u22 = -1;  // u-block; u11/u21 are hubs
    std::vector<Edge> internal_edges;

    std::array<VertexId, 8> vertices() const {
        return {v11, v12, v21, v22, u11, u12, u21, u22};
    }
    std::array<Edge, 2> port_pairs() const {
        return {Edge(v11, v12), Edge(v21, v22)};
    }
    Edge bridge() const { return Edge(v12, v21); }
    std::array<Edge, 2> u_pair_edges() const {
        return {Edge(u11, u12), Edge(u21, u22)};
    }
};

struct ClauseBlock {
    int index = 0;                        // 1-based clause position
    std::array<VertexId, 4> spine_col{};  // x=-1 band, ascending y
    VertexId t1 = -1, t2 = -1;            // x=0 pair, theorem 1 only
    PairGadget first, second;
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;  // E(G(C_j)), excluding connector infrastructure
};

struct VariableCycle {
    int variable = 0;
    std::vector<std::pair<int, int>> occurrences;  // (clause index, literal slot 0/1)
    std::vector<VertexId> vertex_order;            // cyclic, 4 * r(i) ports
    std::vector<Edge> class_h;                     // in-gadget port pairs
    std::vector<Edge> class_v;                     // bridges and inter-occurrence links
};

struct ReductionArtifact {
    TheoremId theorem = TheoremId::theorem1;
    int k = 0;
    int K = 0;
    int m = 0;
    int n = 0;
    EmbeddedGraph graph;
    std::vector<ClauseBlock> blocks;
    std::vector<VariableCycle> cycles;
    std::vector<Edge> spine_pairs;      // column pairs plus t-pairs
    std::vector<Edge> u_pairs;
    std::vector<Edge> connector_edges;  // the x=-1 column path plus anchors
    std::vector<VertexRole> roles;
    E2SatInstance instance;
};

namespace detail {

struct Assembly {
    std::vector<Coord> coords;
    std::vector<VertexRole> roles;
    std::vector<Edge> edges;

    VertexId add_vertex(int x, int y, VertexRole role) {
        coords.push_back(Coord{x, y});
        roles.push_back(role);
        return static_cast<VertexId>(coords.size()) - 1;
    }
    void add_edge(VertexId u, VertexId v) { edges.emplace_back(u, v); }
    int vertex_count() const { return static_cast<int>(coords.size()); }
};

}  // namespace detail

// One occurrence of a variable in a clause, anchored at (x0, y_base) inside
// the clause band.
inline PairGadget build_pair_gadget(detail::Assembly& a, bool negated, int x0, int y_base) {
    PairGadget g;
    g.negated = negated;
    g.v11 = a.add_vertex(x0, y_base, VertexRole::Port);
    g.v12 = a.add_vertex(x0 + 1, y_base, VertexRole::Port);
    g.v21 = a.add_vertex(x0 + 1, y_base + 1, VertexRole::Port);
    g.v22 = a.add_vertex(x0 + 2, y_base + 1, VertexRole::Port);
    g.u11 = a.add_vertex(x0 + 1, y_base + 2, VertexRole::UBlock);
    g.u12 = a.add_vertex(x0, y_base + 2, VertexRole::UBlock);
    g.u21 = a.add_vertex(x0 + 3, y_base + 1, VertexRole::UBlock);
    g.u22 = a.add_vertex(x0 + 3, y_base + 2, VertexRole::UBlock);
    auto internal = [&](VertexId u, VertexId v) {
        a.add_edge(u, v);
        g.internal_edges.emplace_back(u, v);
    };
    internal(g.u11, g.u12);
    internal(g.u21, g.u22);
    internal(g.v11, g.v12);
    internal(g.v21, g.v22);
    internal(g.v12, g.v21);
    internal(g.u11, negated ? g.v11 : g.v21);
    internal(g.u21, g.v22);
    return g;
}

inline ClauseBlock build_clause_block(detail::Assembly& a, TheoremId theorem,
                                      const Clause& clause, int j) {
    ClauseBlock b;
    b.index = j;
    const int Y = 4 * j - 3;
    for (int dy = 0; dy < 4; ++dy)
        b.spine_col[static_cast<size_t>(dy)] = a.add_vertex(-1, Y + dy, VertexRole::Spine);
    std::vector<Edge> block_edges;
    auto block_edge = [&](VertexId u, VertexId v) {
        a.add_edge(u, v);
        block_edges.emplace_back(u, v);
    };
    // Column spine pairs ((-1,2j'-1),(-1,2j')) for the clause's two j' values.
    block_edge(b.spine_col[0], b.spine_col[1]);
    block_edge(b.spine_col[2], b.spine_col[3]);
    if (theorem == TheoremId::theorem1) {
        b.t1 = a.add_vertex(0, Y + 2, VertexRole::Spine);
        b.t2 = a.add_vertex(0, Y + 3, VertexRole::Spine);
        block_edge(b.t1, b.t2);
    }
    b.first = build_pair_gadget(a, clause.first.negated, 2, Y);
    b.second = build_pair_gadget(a, clause.second.negated, 8, Y);
    for (const PairGadget* g : {&b.first, &b.second})
        block_edges.insert(block_edges.end(), g->internal_edges.begin(),
                           g->internal_edges.end());
    if (theorem == TheoremId::theorem1) {
        block_edge(b.t1, b.first.u11);
        block_edge(b.t1, b.second.u11);
    } else {
        block_edge(b.first.u11, clause.second.negated ? b.second.v21 : b.second.v11);
    }
    for (VertexId v : b.spine_col)
        b.vertices.push_back(v);
    if (b.t1 != -1) {
        b.vertices.push_back(b.t1);
        b.vertices.push_back(b.t2);
    }
    for (const PairGadget* g : {&b.first, &b.second})
        for (VertexId v : g->vertices())
            b.vertices.push_back(v);
    b.edges = std::move(block_edges);
    return b;
}

// Cyclically connects each variable's occurrences in ascending clause order:
// v22 of one occurrence to v11 of the next.
inline std::vector<VariableCycle> link_variable_cycles(detail::Assembly& a,
                                                       const std::vector<ClauseBlock>& blocks,
                                                       const E2SatInstance& inst) {
    std::vector<VariableCycle> cycles;
    for (int i = 1; i <= inst.variable_count(); ++i) {
        VariableCycle cyc;
        cyc.variable = i;
        for (const ClauseBlock& b : blocks) {
            const Clause& c = inst.clause(b.index);
            if (c.first.var == i)
                cyc.occurrences.emplace_back(b.index, 0);
            if (c.second.var == i)
                cyc.occurrences.emplace_back(b.index, 1);
        }
        const size_t r = cyc.occurrences.size();
        if (r < 2)
            throw ReductionError("variable x" + std::to_string(i) +
                                 " occurs fewer than twice; its cycle would degenerate");
        auto gadget_of = [&](size_t t) -> const PairGadget& {
            auto [cj, slot] = cyc.occurrences[t];
            const ClauseBlock& b = blocks[static_cast<size_t>(cj - 1)];
            return slot == 0 ? b.first : b.second;
        };
        for (size_t t = 0; t < r; ++t) {
            const PairGadget& g = gadget_of(t);
            const PairGadget& next = gadget_of((t + 1) % r);
            cyc.vertex_order.insert(cyc.vertex_order.end(), {g.v11, g.v12, g.v21, g.v22});
            cyc.class_h.push_back(Edge(g.v11, g.v12));
            cyc.class_h.push_back(Edge(g.v21, g.v22));
            cyc.class_v.push_back(g.bridge());
            Edge link(g.v22, next.v11);
            a.add_edge(link.u, link.v);
            cyc.class_v.push_back(link);
        }
        std::sort(cyc.class_h.begin(), cyc.class_h.end());
        std::sort(cyc.class_v.begin(), cyc.class_v.end());
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

struct ConnectorResult {
    EmbeddedGraph graph;
    std::vector<Edge> connector_edges;
};

// Completes the x=-1 column into a path through all 4m spine vertices and
// anchors every block to it, making G_I connected.
inline ConnectorResult attach_connector(detail::Assembly& a,
                                        const std::vector<ClauseBlock>& blocks) {
    ConnectorResult out;
    const int m = static_cast<int>(blocks.size());
    auto column_vertex = [&](int y) {
        int j = (y + 3) / 4;  // owning clause band
        return blocks[static_cast<size_t>(j - 1)].spine_col[static_cast<size_t>(y - (4 * j - 3))];
    };
    for (int y = 1; y < 4 * m; ++y) {
        Edge e(column_vertex(y), column_vertex(y + 1));
        if (y % 2 == 0)
            a.add_edge(e.u, e.v);  // pairs were added with their blocks
        out.connector_edges.push_back(e);
    }
    for (const ClauseBlock& b : blocks) {
        Edge anchor(b.first.u21, b.spine_col[2]);
        a.add_edge(anchor.u, anchor.v);
        out.connector_edges.push_back(anchor);
    }
    out.graph = EmbeddedGraph(Graph(a.vertex_count(), a.edges), a.coords);
    return out;
}

inline ReductionArtifact reduce(const E2SatInstance& inst, int K, TheoremId theorem) {
    if (auto bad = validate_strict(inst); !bad.empty())
        throw ReductionError("instance is not strict: variable x" + std::to_string(bad.front()) +
                             " occurs in fewer than two clauses");
    const int m = inst.clause_count();
    if (K < 1 || K > m)
        throw ReductionError("K = " + std::to_string(K) + " outside 1.." + std::to_string(m));
    detail::Assembly a;
    ReductionArtifact art;
    art.theorem = theorem;
    art.K = K;
    art.m = m;
    art.n = inst.variable_count();
    art.instance = inst;
    art.k = theorem == TheoremId::theorem1 ? 7 * m + K - 1 : 8 * m - 1 - K;
    for (int j = 1; j <= m; ++j)
        art.blocks.push_back(build_clause_block(a, theorem, inst.clause(j), j));
    art.cycles = link_variable_cycles(a, art.blocks, inst);
    ConnectorResult conn = attach_connector(a, art.blocks);
    art.graph = std::move(conn.graph);
    art.connector_edges = std::move(conn.connector_edges);
    art.roles = a.roles;
    for (const ClauseBlock& b : art.blocks) {
        art.spine_pairs.push_back(Edge(b.spine_col[0], b.spine_col[1]));
        art.spine_pairs.push_back(Edge(b.spine_col[2], b.spine_col[3]));
        if (b.t1 != -1)
            art.spine_pairs.push_back(Edge(b.t1, b.t2));
        for (const PairGadget* g : {&b.first, &b.second})
            for (const Edge& e : g->u_pair_edges())
                art.u_pairs.push_back(e);
    }
    std::sort(art.spine_pairs.begin(), art.spine_pairs.end());
    std::sort(art.u_pairs.begin(), art.u_pairs.end());
    return art;
}

// ---------------------------------------------------------------------------
// Assignment <-> perfect matching maps.

// Theorem 1 takes the horizontal class (port pairs) when eps_i = 0 and the
// vertical class (bridges + links) when eps_i = 1; theorem 2 swaps the two.
inline bool takes_horizontal(TheoremId theorem, int eps_i) {
    return theorem == TheoremId::theorem1 ? eps_i == 0 : eps_i == 1;
}

inline Matching assignment_to_matching(const ReductionArtifact& art, const Assignment& eps) {
    if (static_cast<int>(eps.size()) != art.n)
        throw ReductionError("assignment length " + std::to_string(eps.size()) + " != n = " +
                             std::to_string(art.n));
    Matching f = art.spine_pairs;
    f.insert(f.end(), art.u_pairs.begin(), art.u_pairs.end());
    for (const VariableCycle& cyc : art.cycles) {
        const auto& cls = takes_horizontal(art.theorem, eps[static_cast<size_t>(cyc.variable - 1)])
                              ? cyc.class_h
                              : cyc.class_v;
        f.insert(f.end(), cls.begin(), cls.end());
    }
    return normalized(std::move(f));
}

inline Assignment matching_to_assignment(const ReductionArtifact& art, const Matching& f) {
    const Graph& g = art.graph.graph();
    if (!is_matching(g, f) || 2 * static_cast<int>(f.size()) != g.vertex_count())
        throw InvalidMatchingError("not a perfect matching of the artifact graph");
    std::vector<Edge> sorted = f;
    std::sort(sorted.begin(), sorted.end());
    auto contains = [&](const Edge& e) {
        return std::binary_search(sorted.begin(), sorted.end(), e);
    };
    Assignment eps(static_cast<size_t>(art.n), 0);
    for (const VariableCycle& cyc : art.cycles) {
        bool all_h = true, any_h = false, all_v = true, any_v = false;
        for (const Edge& e : cyc.class_h) {
            if (contains(e)) any_h = true; else all_h = false;
        }
        for (const Edge& e : cyc.class_v) {
            if (contains(e)) any_v = true; else all_v = false;
        }
        int eps_i;
        if (all_h && !any_v)
            eps_i = art.theorem == TheoremId::theorem1 ? 0 : 1;
        else if (all_v && !any_h)
            eps_i = art.theorem == TheoremId::theorem1 ? 1 : 0;
        else
            throw ReductionError("matching mixes cycle classes on S_" +
                                 std::to_string(cyc.variable) +
                                 ": gadget contract violation");
        eps[static_cast<size_t>(cyc.variable - 1)] = static_cast<std::uint8_t>(eps_i);
    }
    return eps;
}

// ---------------------------------------------------------------------------
// Per-clause residual table.

struct ClauseResidualTable {
    int clause_index = 0;
    // beta(G(C_j) \ F_eps(j)) for the clause's two variables set to (a, b).
    std::array<std::array<int, 2>, 2> beta{};
    std::array<std::array<int, 2>, 2> expected{};
    bool ok = false;
};

inline ClauseResidualTable clause_residual_table(const ReductionArtifact& art, int j,
                                                 const SearchLimits& limits = {}) {
    const ClauseBlock& b = art.blocks.at(static_cast<size_t>(j - 1));
    const Clause& clause = art.instance.clause(j);
    // Local copy of the block subgraph.
    std::map<VertexId, VertexId> local;
    for (VertexId v : b.vertices)
        local.emplace(v, static_cast<VertexId>(local.size()));
    std::vector<Edge> local_edges;
    for (const Edge& e : b.edges)
        local_edges.emplace_back(local.at(e.u), local.at(e.v));
    Graph block_graph(static_cast<int>(local.size()), local_edges);

    ClauseResidualTable out;
    out.clause_index = j;
    out.ok = true;
    for (int aa = 0; aa < 2; ++aa) {
        for (int bb = 0; bb < 2; ++bb) {
            std::vector<Edge> removed;
            removed.emplace_back(local.at(b.spine_col[0]), local.at(b.spine_col[1]));
            removed.emplace_back(local.at(b.spine_col[2]), local.at(b.spine_col[3]));
            if (b.t1 != -1)
                removed.emplace_back(local.at(b.t1), local.at(b.t2));
            const std::array<std::pair<const PairGadget*, int>, 2> parts{
                std::make_pair(&b.first, aa), std::make_pair(&b.second, bb)};
            for (auto [g, bit] : parts) {
                for (const Edge& e : g->u_pair_edges())
                    removed.emplace_back(local.at(e.u), local.at(e.v));
                if (takes_horizontal(art.theorem, bit)) {
                    for (const Edge& e : g->port_pairs())
                        removed.emplace_back(local.at(e.u), local.at(e.v));
                } else {
                    Edge e = g->bridge();
                    removed.emplace_back(local.at(e.u), local.at(e.v));
                }
            }
            int r = matching_number(block_graph.without_edges(removed), limits);
            bool sat = (clause.first.negated ? aa == 0 : aa == 1) ||
                       (clause.second.negated ? bb == 0 : bb == 1);
            int want = art.theorem == TheoremId::theorem1 ? (sat ? 6 : 5) : (sat ? 5 : 6);
            out.beta[static_cast<size_t>(aa)][static_cast<size_t>(bb)] = r;
            out.expected[static_cast<size_t>(aa)][static_cast<size_t>(bb)] = want;
            if (r != want)
                out.ok = false;
        }
    }
    return out;
}

}  // namespace resmatch
