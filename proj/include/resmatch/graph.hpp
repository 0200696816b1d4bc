#pragma once

// Simple undirected graphs with dense integer vertex ids, optional plane
// embeddings whose coordinate parity certifies bipartiteness, and
// classification of the polynomially solvable special families.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resmatch {

using VertexId = int;

struct Edge {
    VertexId u = -1;
    VertexId v = -1;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable simple graph. No loops, no duplicate edges; adjacency is kept
// sorted so that every traversal is deterministic.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<Edge> edges)
        : n_(vertex_count), edges_(std::move(edges)) {
        if (n_ < 0)
            throw GraphError("negative vertex count");
        std::sort(edges_.begin(), edges_.end());
        adj_.assign(static_cast<size_t>(n_), {});
        Edge prev{-1, -1};
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.v >= n_)
                throw GraphError("edge endpoint out of range: (" +
                                 std::to_string(e.u) + "," + std::to_string(e.v) + ")");
            if (e.u == e.v)
                throw GraphError("self-loop at vertex " + std::to_string(e.u));
            if (e == prev)
                throw GraphError("duplicate edge (" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) + ")");
            prev = e;
            adj_[static_cast<size_t>(e.u)].push_back(e.v);
            adj_[static_cast<size_t>(e.v)].push_back(e.u);
        }
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(static_cast<size_t>(v)); }
    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(VertexId a, VertexId b) const {
        Edge e{a, b};
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj_)
            d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    // Component id per vertex, numbered in order of first appearance.
    std::vector<int> components() const {
        std::vector<int> comp(static_cast<size_t>(n_), -1);
        int next = 0;
        std::vector<VertexId> stack;
        for (VertexId s = 0; s < n_; ++s) {
            if (comp[static_cast<size_t>(s)] != -1)
                continue;
            comp[static_cast<size_t>(s)] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                for (VertexId w : neighbors(v)) {
                    if (comp[static_cast<size_t>(w)] == -1) {
                        comp[static_cast<size_t>(w)] = next;
                        stack.push_back(w);
                    }
                }
            }
            ++next;
        }
        return comp;
    }

    // The empty graph counts as connected.
    bool connected() const {
        if (n_ == 0)
            return true;
        auto comp = components();
        return *std::max_element(comp.begin(), comp.end()) == 0;
    }

    Graph without_edges(const std::vector<Edge>& removed) const {
        std::vector<Edge> rm = removed;
        std::sort(rm.begin(), rm.end());
        std::vector<Edge> kept;
        kept.reserve(edges_.size());
        for (const Edge& e : edges_)
            if (!std::binary_search(rm.begin(), rm.end(), e))
                kept.push_back(e);
        return Graph(n_, std::move(kept));
    }

    Graph without_edge(const Edge& e) const { return without_edges({e}); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
};

inline Graph build_graph(int vertex_count, std::vector<Edge> edges) {
    return Graph(vertex_count, std::move(edges));
}

struct GraphStats {
    int vertices = 0;
    int edges = 0;
    int max_degree = 0;
    bool connected = true;
};

inline GraphStats graph_stats(const Graph& g) {
    return GraphStats{g.vertex_count(), g.edge_count(), g.max_degree(), g.connected()};
}

// ---------------------------------------------------------------------------
// Plane embedding with the coordinate parity rule.

struct Coord {
    int x = 0;
    int y = 0;
    friend bool operator==(const Coord&, const Coord&) = default;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

inline int parity_side(const Coord& c) {
    int p = (c.x + c.y) % 2;
    return p < 0 ? p + 2 : p;
}

// For an edge ((x,y),(x',y')) the rule is that |x-x'| and |y-y'| have
// opposite parity, which is the same as saying x+y changes parity.
inline bool parity_edge_ok(const Coord& a, const Coord& b) {
    return parity_side(a) != parity_side(b);
}

// A graph together with integer coordinates for every vertex. Coordinates
// must be pairwise distinct; the per-edge parity rule is checked by
// parity_bipartition so that violating embeddings can be diagnosed.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    EmbeddedGraph(Graph g, std::vector<Coord> coords)
        : graph_(std::move(g)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != graph_.vertex_count())
            throw GraphError("coordinate count does not match vertex count");
        std::vector<Coord> sorted = coords_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw GraphError("coordinates are not pairwise distinct");
    }

    const Graph& graph() const { return graph_; }
    const std::vector<Coord>& coords() const { return coords_; }
    const Coord& coord(VertexId v) const { return coords_.at(static_cast<size_t>(v)); }

private:
    Graph graph_;
    std::vector<Coord> coords_;
};

struct Bipartition {
    std::vector<VertexId> side0;
    std::vector<VertexId> side1;
};

// Two-coloring by (x+y) mod 2. Throws if some edge stays inside one side,
// i.e. the embedding violates the parity rule.
inline Bipartition parity_bipartition(const EmbeddedGraph& eg) {
    for (const Edge& e : eg.graph().edges()) {
        if (!parity_edge_ok(eg.coord(e.u), eg.coord(e.v)))
            throw GraphError("embedding violates the parity rule on edge (" +
                             std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    Bipartition sides;
    for (VertexId v = 0; v < eg.graph().vertex_count(); ++v)
        (parity_side(eg.coord(v)) == 0 ? sides.side0 : sides.side1).push_back(v);
    return sides;
}

// Proper 2-coloring of an abstract graph, if one exists.
inline std::optional<Bipartition> bipartition_of(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (color[static_cast<size_t>(s)] != -1)
            continue;
        color[static_cast<size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = color[static_cast<size_t>(v)] ^ 1;
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition sides;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        (color[static_cast<size_t>(v)] == 0 ? sides.side0 : sides.side1).push_back(v);
    return sides;
}

// ---------------------------------------------------------------------------
// Special families from the closed-form solver.

struct ComponentShape {
    bool is_cycle = false;
    // Path: vertices from one endpoint to the other (a single vertex for the
    // zero-edge path). Cycle: vertices in cyclic order.
    std::vector<VertexId> order;

    int edge_count() const {
        if (order.empty())
            return 0;
        return is_cycle ? static_cast<int>(order.size())
                        : static_cast<int>(order.size()) - 1;
    }
};

// Decomposes a graph with max degree <= 2 into path/cycle components,
// with deterministic traversal order. Returns nullopt if some vertex has
// degree three or more.
inline std::optional<std::vector<ComponentShape>> degree_le2_decomposition(const Graph& g) {
    if (g.max_degree() > 2)
        return std::nullopt;
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    std::vector<ComponentShape> shapes;
    auto walk = [&](VertexId start, VertexId forbid) {
        // Follows the unique unvisited direction from start.
        std::vector<VertexId> path{start};
        seen[static_cast<size_t>(start)] = true;
        VertexId prev = forbid, cur = start;
        for (;;) {
            VertexId next = -1;
            for (VertexId w : g.neighbors(cur))
                if (w != prev && !seen[static_cast<size_t>(w)]) {
                    next = w;
                    break;
                }
            if (next == -1)
                break;
            path.push_back(next);
            seen[static_cast<size_t>(next)] = true;
            prev = cur;
            cur = next;
        }
        return path;
    };
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<size_t>(s)])
            continue;
        if (g.degree(s) == 1 || g.degree(s) == 0) {
            ComponentShape shape;
            shape.order = walk(s, -1);
            shape.is_cycle = false;
            shapes.push_back(std::move(shape));
        }
    }
    // Remaining unvisited vertices all have degree two: cycles.
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<size_t>(s)])
            continue;
        ComponentShape shape;
        shape.order = walk(s, -1);
        shape.is_cycle = true;
        shapes.push_back(std::move(shape));
    }
    return shapes;
}

struct SpecialClass {
    enum class Kind { Path, Cycle, DegreeAtMostTwo, RegularBipartite, General };

    Kind kind = Kind::General;
    // Path/Cycle: number of edges. RegularBipartite: the degree r.
    int param = 0;
    // DegreeAtMostTwo: shape of every component.
    std::vector<ComponentShape> component_shapes;

    std::string describe() const {
        switch (kind) {
        case Kind::Path: return "Path(" + std::to_string(param) + ")";
        case Kind::Cycle: return "Cycle(" + std::to_string(param) + ")";
        case Kind::DegreeAtMostTwo:
            return "DegreeAtMostTwo(" + std::to_string(component_shapes.size()) + " components)";
        case Kind::RegularBipartite: return "RegularBipartite(" + std::to_string(param) + ")";
        case Kind::General: return "General";
        }
        return "General";
    }
};

// Tags connected paths/cycles first, then mixed or disconnected graphs with
// max degree <= 2, then r-regular bipartite graphs with r >= 2.
inline SpecialClass classify_special(const Graph& g) {
    SpecialClass result;
    if (auto shapes = degree_le2_decomposition(g)) {
        if (shapes->size() == 1 && g.vertex_count() > 0) {
            const ComponentShape& only = shapes->front();
            result.kind = only.is_cycle ? SpecialClass::Kind::Cycle : SpecialClass::Kind::Path;
            result.param = only.edge_count();
            result.component_shapes = std::move(*shapes);
            return result;
        }
        result.kind = SpecialClass::Kind::DegreeAtMostTwo;
        result.component_shapes = std::move(*shapes);
        return result;
    }
    int r = g.vertex_count() > 0 ? g.degree(0) : 0;
    bool regular = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != r)
            regular = false;
    if (regular && r >= 2 && bipartition_of(g).has_value()) {
        result.kind = SpecialClass::Kind::RegularBipartite;
        result.param = r;
        return result;
    }
    result.kind = SpecialClass::Kind::General;
    return result;
}

}  // namespace resmatch
