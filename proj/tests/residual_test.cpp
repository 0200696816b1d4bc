#include <gtest/gtest.h>

#include <random>

#include "resmatch/residual.hpp"
#include "test_oracle.hpp"

using namespace resmatch;

namespace {

// Summary by full enumeration, used to cross-check the closed forms.
ResidualSummary enumerated_summary(const Graph& g) { return residual_summary(g); }

}  // namespace

TEST(ResidualAfter, FourCyclePerfectMatching) {
    Graph g = oracle::cycle_graph(4);
    EXPECT_EQ(residual_after(g, {{0, 1}, {2, 3}}), 2);
}

TEST(ResidualAfter, PathExamples) {
    Graph g = oracle::path_graph(4);
    EXPECT_EQ(residual_after(g, {{0, 1}, {3, 4}}), 1);  // e1, e4
    EXPECT_EQ(residual_after(g, {{0, 1}, {2, 3}}), 2);  // e1, e3
}

TEST(ResidualAfter, RejectsNonMaximumOrNonMatching) {
    Graph g = oracle::path_graph(4);
    EXPECT_THROW(residual_after(g, {{0, 1}}), InvalidMatchingError);
    EXPECT_THROW(residual_after(g, {{0, 1}, {1, 2}}), InvalidMatchingError);
}

TEST(MaxResidual, PathWithFourEdges) {
    auto r = max_residual(oracle::path_graph(4));
    EXPECT_EQ(r.value, 2);
    EXPECT_EQ(r.witness, (Matching{{0, 1}, {2, 3}}));  // first attaining in lex order
}

TEST(MaxResidual, PathWithFiveEdgesUniqueMaximum) {
    auto r = max_residual(oracle::path_graph(5));
    EXPECT_EQ(r.value, 2);
    EXPECT_EQ(r.witness, (Matching{{0, 1}, {2, 3}, {4, 5}}));
}

TEST(MaxResidual, SixCycle) {
    auto r = max_residual(oracle::cycle_graph(6));
    EXPECT_EQ(r.value, 3);
    EXPECT_EQ(r.witness.size(), 3u);
}

TEST(MinResidual, PathWithFourEdges) {
    auto r = min_residual(oracle::path_graph(4));
    EXPECT_EQ(r.value, 1);
    EXPECT_EQ(r.witness, (Matching{{0, 1}, {3, 4}}));  // e1, e4
}

TEST(MinResidual, PathWithTwoEdges) {
    // Both maximum matchings leave one edge: the k-1 bound is not attained.
    auto r = min_residual(oracle::path_graph(2));
    EXPECT_EQ(r.value, 1);
    EXPECT_EQ(r.witness, (Matching{{0, 1}}));
}

TEST(MinResidual, SevenCycle) {
    EXPECT_EQ(min_residual(oracle::cycle_graph(7)).value, 3);
}

TEST(Decide, PathWithFourEdges) {
    Graph g = oracle::path_graph(4);
    EXPECT_TRUE(decide_ge(g, 2).answer);
    EXPECT_FALSE(decide_ge(g, 3).answer);
    EXPECT_TRUE(decide_le(g, 1).answer);
    EXPECT_FALSE(decide_le(g, 0).answer);
}

TEST(Decide, TrivialConventions) {
    for (const Graph& g : {oracle::path_graph(3), oracle::cycle_graph(5), Graph(2, {})}) {
        EXPECT_TRUE(decide_ge(g, 0).answer);
        EXPECT_EQ(decide_le(g, 0).answer, min_residual(g).value == 0);
    }
}

TEST(Decide, AgreesWithOptimaOnCorpus) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<Edge> pool;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                pool.emplace_back(a, b);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(std::min(pool.size(), static_cast<size_t>(rng() % 11)));
        Graph g(n, pool);
        int beta = matching_number(g);
        auto mx = max_residual(g);
        auto mn = min_residual(g);
        for (int k = 0; k <= beta + 1; ++k) {
            EXPECT_EQ(decide_ge(g, k).answer, mx.value >= k);
            EXPECT_EQ(decide_le(g, k).answer, mn.value <= k);
        }
        // Witness validity.
        EXPECT_EQ(residual_after(g, mx.witness), mx.value);
        EXPECT_EQ(residual_after(g, mn.witness), mn.value);
    }
}

TEST(SpecialCase, PathClosedFormsMatchEnumeration) {
    for (int n = 1; n <= 12; ++n) {
        Graph g = oracle::path_graph(n);
        auto closed = special_case_residual(g);
        ASSERT_TRUE(closed.has_value()) << "P_" << n;
        auto brute = enumerated_summary(g);
        EXPECT_EQ(closed->beta, brute.beta) << "P_" << n;
        EXPECT_EQ(closed->min_residual, brute.min_residual) << "P_" << n;
        EXPECT_EQ(closed->max_residual, brute.max_residual) << "P_" << n;
        // Paper's closed forms.
        int k = n / 2;
        if (n % 2 == 0) {
            EXPECT_EQ(closed->max_residual, k);
            EXPECT_EQ(closed->min_residual, k >= 2 ? k - 1 : k);
        } else {
            EXPECT_EQ(closed->min_residual, k);
            EXPECT_EQ(closed->max_residual, k);
        }
        // Witnesses achieve the reported values.
        EXPECT_EQ(residual_after(g, closed->min_witness), closed->min_residual);
        EXPECT_EQ(residual_after(g, closed->max_witness), closed->max_residual);
    }
}

TEST(SpecialCase, CycleClosedFormsMatchEnumeration) {
    for (int n = 3; n <= 12; ++n) {
        Graph g = oracle::cycle_graph(n);
        auto closed = special_case_residual(g);
        ASSERT_TRUE(closed.has_value()) << "C_" << n;
        auto brute = enumerated_summary(g);
        EXPECT_EQ(closed->min_residual, n / 2);
        EXPECT_EQ(closed->max_residual, n / 2);
        EXPECT_EQ(closed->min_residual, brute.min_residual) << "C_" << n;
        EXPECT_EQ(closed->max_residual, brute.max_residual) << "C_" << n;
        EXPECT_EQ(residual_after(g, closed->min_witness), closed->min_residual);
    }
}

TEST(SpecialCase, PathWithSixEdges) {
    auto s = special_case_residual(oracle::path_graph(6));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->min_residual, 2);
    EXPECT_EQ(s->max_residual, 3);
}

TEST(SpecialCase, RegularBipartite) {
    auto s = special_case_residual(oracle::complete_bipartite(3, 3));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->beta, 3);
    EXPECT_EQ(s->min_residual, 3);
    EXPECT_EQ(s->max_residual, 3);
    EXPECT_EQ(residual_after(oracle::complete_bipartite(3, 3), s->max_witness), 3);
    auto s22 = special_case_residual(oracle::complete_bipartite(2, 2));
    ASSERT_TRUE(s22);
    EXPECT_EQ(s22->min_residual, 2);
}

TEST(SpecialCase, DisjointUnionAddsComponentwise) {
    // 2-edge path plus a 4-cycle.
    Graph g = build_graph(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
    auto s = special_case_residual(g);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->min_residual, 3);
    EXPECT_EQ(s->max_residual, 3);
    auto brute = enumerated_summary(g);
    EXPECT_EQ(brute.min_residual, 3);
    EXPECT_EQ(brute.max_residual, 3);
}

TEST(SpecialCase, GeneralGraphsDecline) {
    EXPECT_FALSE(special_case_residual(oracle::petersen()).has_value());
}

TEST(SpecialCase, MatchesEnumerationOnDegreeTwoCorpus) {
    // Random unions of paths and cycles, <= 12 edges.
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Edge> edges;
        int base = 0;
        int budget = 12;
        while (budget > 0 && base < 14) {
            int len = 1 + static_cast<int>(rng() % 4);
            len = std::min(len, budget);
            bool cycle = len >= 3 && rng() % 2 == 0;
            for (int i = 0; i < len; ++i)
                edges.emplace_back(base + i, cycle && i == len - 1 ? base : base + i + 1);
            base += cycle ? len : len + 1;
            budget -= len;
        }
        Graph g(base, edges);
        auto closed = special_case_residual(g);
        ASSERT_TRUE(closed.has_value());
        auto brute = enumerated_summary(g);
        EXPECT_EQ(closed->beta, brute.beta);
        EXPECT_EQ(closed->min_residual, brute.min_residual);
        EXPECT_EQ(closed->max_residual, brute.max_residual);
        EXPECT_EQ(residual_after(g, closed->min_witness), closed->min_residual);
        EXPECT_EQ(residual_after(g, closed->max_witness), closed->max_residual);
    }
}

TEST(Summary, SinglePassAgreesWithSeparateOptima) {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = trial % 2 ? oracle::path_graph(2 + trial % 6)
                            : oracle::cycle_graph(3 + trial % 6);
        ResidualSummary s = residual_summary(g);
        EXPECT_EQ(s.beta, matching_number(g));
        EXPECT_EQ(s.max_residual, max_residual(g).value);
        EXPECT_EQ(s.min_residual, min_residual(g).value);
        EXPECT_EQ(s.max_witness, max_residual(g).witness);
        EXPECT_EQ(s.min_witness, min_residual(g).witness);
    }
}

TEST(Additivity, DisjointUnionsAddResiduals) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g1 = oracle::path_graph(1 + static_cast<int>(rng() % 4));
        Graph g2 = oracle::cycle_graph(3 + static_cast<int>(rng() % 4));
        std::vector<Edge> edges = g1.edges();
        for (const Edge& e : g2.edges())
            edges.emplace_back(e.u + g1.vertex_count(), e.v + g1.vertex_count());
        Graph un(g1.vertex_count() + g2.vertex_count(), edges);
        EXPECT_EQ(max_residual(un).value, max_residual(g1).value + max_residual(g2).value);
        EXPECT_EQ(min_residual(un).value, min_residual(g1).value + min_residual(g2).value);
    }
}
