#include <gtest/gtest.h>

#include <random>

#include "resmatch/graph.hpp"
#include "resmatch/graph_io.hpp"
#include "test_oracle.hpp"

using namespace resmatch;

TEST(GraphBuild, EmptyGraph) {
    Graph g = build_graph(0, {});
    EXPECT_EQ(g.vertex_count(), 0);
    EXPECT_EQ(g.edge_count(), 0);
    auto st = graph_stats(g);
    EXPECT_EQ(st.vertices, 0);
    EXPECT_EQ(st.edges, 0);
    EXPECT_EQ(st.max_degree, 0);
    EXPECT_TRUE(st.connected);
}

TEST(GraphBuild, PathConstruction) {
    Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto st = graph_stats(g);
    EXPECT_EQ(st.vertices, 5);
    EXPECT_EQ(st.edges, 4);
    EXPECT_EQ(st.max_degree, 2);
    EXPECT_TRUE(st.connected);
}

TEST(GraphBuild, RejectsDuplicateEdge) {
    EXPECT_THROW(build_graph(2, {{0, 1}, {1, 0}}), GraphError);
}

TEST(GraphBuild, RejectsSelfLoop) {
    EXPECT_THROW(build_graph(2, {{1, 1}}), GraphError);
}

TEST(GraphBuild, RejectsOutOfRange) {
    EXPECT_THROW(build_graph(2, {{0, 2}}), GraphError);
    EXPECT_THROW(build_graph(2, {{-1, 0}}), GraphError);
}

TEST(GraphMisc, WithoutEdgesAndConnectivity) {
    Graph g = oracle::cycle_graph(4);
    Graph h = g.without_edge({0, 1});
    EXPECT_EQ(h.edge_count(), 3);
    EXPECT_TRUE(h.connected());
    Graph two = build_graph(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(two.connected());
    auto comp = two.components();
    EXPECT_EQ(comp[0], comp[1]);
    EXPECT_EQ(comp[2], comp[3]);
    EXPECT_NE(comp[0], comp[2]);
}

TEST(ParityBipartition, SingleEdge) {
    EmbeddedGraph eg(build_graph(2, {{0, 1}}), {{0, 0}, {1, 0}});
    Bipartition sides = parity_bipartition(eg);
    EXPECT_EQ(sides.side0, std::vector<VertexId>{0});
    EXPECT_EQ(sides.side1, std::vector<VertexId>{1});
}

TEST(ParityBipartition, RejectsSameParityEdge) {
    EmbeddedGraph eg(build_graph(2, {{0, 1}}), {{0, 0}, {2, 0}});
    EXPECT_THROW(parity_bipartition(eg), GraphError);
}

TEST(ParityBipartition, RejectsDuplicateCoordinates) {
    EXPECT_THROW(EmbeddedGraph(build_graph(2, {{0, 1}}), {{1, 1}, {1, 1}}), GraphError);
}

TEST(ParityBipartition, ProperColoringOnAcceptedEmbeddings) {
    // Random parity-respecting embeddings: the 2-coloring is always proper.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int half = 2 + static_cast<int>(rng() % 4);
        Graph g = oracle::complete_bipartite(half, half);
        std::vector<Coord> coords;
        for (int v = 0; v < 2 * half; ++v) {
            int side = v < half ? 0 : 1;
            coords.push_back(Coord{2 * v, side});  // x even, y parity = side
        }
        EmbeddedGraph eg(g, coords);
        Bipartition sides = parity_bipartition(eg);
        std::vector<int> side_of(static_cast<size_t>(g.vertex_count()), -1);
        for (VertexId v : sides.side0) side_of[static_cast<size_t>(v)] = 0;
        for (VertexId v : sides.side1) side_of[static_cast<size_t>(v)] = 1;
        for (const Edge& e : g.edges())
            EXPECT_NE(side_of[static_cast<size_t>(e.u)], side_of[static_cast<size_t>(e.v)]);
    }
}

TEST(ClassifySpecial, NamedFamilies) {
    EXPECT_EQ(classify_special(oracle::cycle_graph(6)).kind, SpecialClass::Kind::Cycle);
    EXPECT_EQ(classify_special(oracle::cycle_graph(6)).param, 6);
    EXPECT_EQ(classify_special(oracle::path_graph(4)).kind, SpecialClass::Kind::Path);
    EXPECT_EQ(classify_special(oracle::path_graph(4)).param, 4);
    auto k33 = classify_special(oracle::complete_bipartite(3, 3));
    EXPECT_EQ(k33.kind, SpecialClass::Kind::RegularBipartite);
    EXPECT_EQ(k33.param, 3);
    // Triangle: 2-regular but odd, caught as a cycle before regular-bipartite.
    EXPECT_EQ(classify_special(oracle::cycle_graph(3)).kind, SpecialClass::Kind::Cycle);
    // K4 is 3-regular but not bipartite.
    Graph k4 = build_graph(4, {{0,1},{0,2},{0,3},{1,2},{1,3},{2,3}});
    EXPECT_EQ(classify_special(k4).kind, SpecialClass::Kind::General);
    // Disjoint path + cycle.
    Graph mix = build_graph(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
    auto cls = classify_special(mix);
    EXPECT_EQ(cls.kind, SpecialClass::Kind::DegreeAtMostTwo);
    EXPECT_EQ(cls.component_shapes.size(), 2u);
}

TEST(ClassifySpecial, StableUnderRelabeling) {
    std::mt19937 rng(11);
    std::vector<Graph> corpus = {oracle::path_graph(5), oracle::cycle_graph(7),
                                 oracle::complete_bipartite(3, 3),
                                 build_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}})};
    for (const Graph& g : corpus) {
        auto before = classify_special(g);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<VertexId> perm(static_cast<size_t>(g.vertex_count()));
            for (size_t i = 0; i < perm.size(); ++i)
                perm[i] = static_cast<VertexId>(i);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<Edge> edges;
            for (const Edge& e : g.edges())
                edges.emplace_back(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]);
            auto after = classify_special(build_graph(g.vertex_count(), edges));
            EXPECT_EQ(after.kind, before.kind);
            EXPECT_EQ(after.param, before.param);
        }
    }
}

TEST(GraphIo, RoundTripIdentity) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Edge> pool;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                pool.emplace_back(a, b);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(std::min(pool.size(), static_cast<size_t>(rng() % 10)));
        Graph g(n, pool);
        bool with_coords = trial % 2 == 0;
        std::string text;
        if (with_coords) {
            std::vector<Coord> coords;
            for (int v = 0; v < n; ++v)
                coords.push_back(Coord{v, v * v});
            text = dump_json(graph_to_json(g, &coords));
        } else {
            text = dump_json(graph_to_json(g));
        }
        GraphFile back = parse_graph(text);
        EXPECT_EQ(back.graph.vertex_count(), g.vertex_count());
        EXPECT_EQ(back.graph.edges(), g.edges());
        EXPECT_EQ(back.coords.has_value(), with_coords);
        // Emitting again reproduces the identical file.
        std::string again = with_coords
                                ? dump_json(graph_to_json(back.graph, &*back.coords))
                                : dump_json(graph_to_json(back.graph));
        EXPECT_EQ(text, again);
    }
}

TEST(GraphIo, ParserRejectsBadInput) {
    EXPECT_THROW(parse_graph("not json"), IoError);
    EXPECT_THROW(parse_graph(R"({"vertices": [], "edges": [[0,1]]})"), IoError);
    EXPECT_THROW(parse_graph(
        R"({"vertices": [{"id":0},{"id":0}], "edges": []})"), IoError);
    EXPECT_THROW(parse_graph(
        R"({"vertices": [{"id":0},{"id":2}], "edges": []})"), IoError);
    // loops / duplicates
    EXPECT_THROW(parse_graph(
        R"({"vertices": [{"id":0},{"id":1}], "edges": [[0,0]]})"), IoError);
    EXPECT_THROW(parse_graph(
        R"({"vertices": [{"id":0},{"id":1}], "edges": [[0,1],[1,0]]})"), IoError);
    // half-specified coordinates
    EXPECT_THROW(parse_graph(
        R"({"vertices": [{"id":0,"x":1,"y":null}], "edges": []})"), IoError);
}

TEST(ParityBipartition, RejectsCoordinateCountMismatch) {
    EXPECT_THROW(EmbeddedGraph(build_graph(2, {{0, 1}}), {{0, 0}}), GraphError);
}

TEST(GraphIo, DotExportMentionsEveryEdge) {
    Graph g = oracle::path_graph(2);
    std::string dot = to_dot(g);
    EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
    EXPECT_NE(dot.find("1 -- 2"), std::string::npos);
}
