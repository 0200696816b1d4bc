#pragma once

// Structural and behavioral certification of reduction artifacts. Every
// claim the constructions rest on is recomputed from scratch here: counts,
// degree and connectivity, the coordinate-parity bipartition, forced edges,
// cycle class integrity, per-clause residual tables, the perfect-matching
// census, the residual accounting identity, and end-to-end equivalence with
// the brute-force Max E2-SAT oracle.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "resmatch/reduction.hpp"

namespace resmatch {

struct ValidationCheck {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string details;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    std::string reproducer_dimacs;
    int theorem = 1;
    int k_min = 1, k_max = 1;

    bool all_pass() const {
        for (const ValidationCheck& c : checks)
            if (!c.skipped && !c.pass)
                return false;
        return true;
    }
};

namespace detail {

// Desk-scale guards for the exhaustive behavioral checks.
constexpr int kCensusMaxVars = 3;
constexpr int kBehavioralMaxVars = 4;
constexpr int kBehavioralMaxClauses = 6;

inline std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace detail

inline ValidationReport validate_reduction(const ReductionArtifact& art, int k_min, int k_max,
                                           const SearchLimits& limits = {}) {
    ValidationReport rep;
    rep.reproducer_dimacs = emit_dimacs(art.instance);
    rep.theorem = static_cast<int>(art.theorem);
    rep.k_min = k_min;
    rep.k_max = k_max;
    const Graph& g = art.graph.graph();
    const bool t1 = art.theorem == TheoremId::theorem1;
    const int m = art.m, n = art.n;
    auto check = [&](const std::string& name, bool pass, std::string details = "") {
        rep.checks.push_back(ValidationCheck{name, pass, false, std::move(details)});
    };
    auto skip = [&](const std::string& name, std::string why) {
        rep.checks.push_back(ValidationCheck{name, true, true, std::move(why)});
    };

    check("structure.max_degree", g.max_degree() == 3,
          "max degree " + std::to_string(g.max_degree()));
    check("structure.connected", g.connected());
    try {
        Bipartition sides = parity_bipartition(art.graph);
        check("structure.parity_embedding", true,
              std::to_string(sides.side0.size()) + "+" + std::to_string(sides.side1.size()) +
                  " vertices");
    } catch (const GraphError& e) {
        check("structure.parity_embedding", false, e.what());
    }

    const int want_v = t1 ? 22 * m : 20 * m;
    const int want_e = t1 ? 24 * m - 1 : 22 * m - 1;
    check("counts.vertices", g.vertex_count() == want_v,
          std::to_string(g.vertex_count()) + " want " + std::to_string(want_v));
    check("counts.edges", g.edge_count() == want_e,
          std::to_string(g.edge_count()) + " want " + std::to_string(want_e));
    int beta = matching_number(g, limits);
    check("counts.beta", beta == want_v / 2,
          std::to_string(beta) + " want " + std::to_string(want_v / 2));
    {
        int want_k = t1 ? 7 * m + art.K - 1 : 8 * m - 1 - art.K;
        check("counts.k_threshold", art.k == want_k,
              std::to_string(art.k) + " want " + std::to_string(want_k));
    }

    {
        bool ok = true;
        std::string details;
        std::set<Edge> seen;
        const size_t want_block_v = t1 ? 22 : 20;
        for (const ClauseBlock& b : art.blocks) {
            if (b.vertices.size() != want_block_v) {
                ok = false;
                details += "block " + std::to_string(b.index) + " has " +
                           std::to_string(b.vertices.size()) + " vertices; ";
            }
            for (const Edge& e : b.edges) {
                if (!g.has_edge(e.u, e.v)) {
                    ok = false;
                    details += "block edge missing from graph " + detail::edge_str(e) + "; ";
                }
                if (!seen.insert(e).second) {
                    ok = false;
                    details += "edge in two blocks " + detail::edge_str(e) + "; ";
                }
            }
        }
        check("blocks.disjoint_edge_sets", ok, details);
    }

    {
        std::vector<Edge> want_forced = art.spine_pairs;
        want_forced.insert(want_forced.end(), art.u_pairs.begin(), art.u_pairs.end());
        std::sort(want_forced.begin(), want_forced.end());
        std::vector<Edge> got = forced_edges(g, limits);
        std::string details = std::to_string(got.size()) + " forced, want " +
                              std::to_string(want_forced.size()) + " (" +
                              std::to_string(t1 ? 7 * m : 6 * m) + ")";
        if (got != want_forced) {
            for (const Edge& e : got)
                if (!std::binary_search(want_forced.begin(), want_forced.end(), e))
                    details += "; unexpected " + detail::edge_str(e);
            for (const Edge& e : want_forced) {
                std::vector<Edge> gs = got;
                if (!std::binary_search(gs.begin(), gs.end(), e))
                    details += "; missing " + detail::edge_str(e);
            }
        }
        check("forced_edges.census",
              got == want_forced &&
                  static_cast<int>(got.size()) == (t1 ? 7 * m : 6 * m),
              details);
    }

    {
        bool ok = true;
        std::string details;
        for (const VariableCycle& cyc : art.cycles) {
            const size_t r = cyc.occurrences.size();
            std::ostringstream why;
            auto fail = [&](const std::string& msg) {
                ok = false;
                why << "S_" << cyc.variable << ": " << msg << "; ";
            };
            if (cyc.vertex_order.size() != 4 * r)
                fail("cycle is not over 4r ports");
            if (cyc.class_h.size() != 2 * r || cyc.class_v.size() != 2 * r)
                fail("class sizes not 2r each");
            std::set<VertexId> verts(cyc.vertex_order.begin(), cyc.vertex_order.end());
            if (verts.size() != cyc.vertex_order.size())
                fail("repeated cycle vertex");
            // Both classes must be perfect matchings of the cycle vertex set.
            for (const auto* cls : {&cyc.class_h, &cyc.class_v}) {
                std::set<VertexId> covered;
                for (const Edge& e : *cls) {
                    if (!g.has_edge(e.u, e.v))
                        fail("class edge missing from graph " + detail::edge_str(e));
                    covered.insert(e.u);
                    covered.insert(e.v);
                }
                if (covered != verts || covered.size() != 2 * cls->size())
                    fail("class is not a perfect matching of the cycle vertices");
            }
            // The union must be exactly the induced subgraph on the ports and
            // a single alternating cycle.
            std::set<Edge> cls_union(cyc.class_h.begin(), cyc.class_h.end());
            cls_union.insert(cyc.class_v.begin(), cyc.class_v.end());
            for (const Edge& e : g.edges())
                if (verts.count(e.u) && verts.count(e.v) && !cls_union.count(e))
                    fail("induced edge outside both classes " + detail::edge_str(e));
            std::map<VertexId, std::vector<VertexId>> adj;
            for (const Edge& e : cls_union) {
                adj[e.u].push_back(e.v);
                adj[e.v].push_back(e.u);
            }
            bool degrees_ok = true;
            for (VertexId v : verts)
                if (adj[v].size() != 2)
                    degrees_ok = false;
            if (!degrees_ok || cls_union.size() != 4 * r) {
                fail("union is not 2-regular of size 4r");
            } else {
                // Walk the cycle, checking it closes after 4r alternating steps.
                VertexId start = cyc.vertex_order.front();
                VertexId prev = start, cur = adj[start][0];
                bool in_h = cls_union.count(Edge(start, cur)) &&
                            std::binary_search(cyc.class_h.begin(), cyc.class_h.end(),
                                               Edge(start, cur));
                size_t steps = 1;
                bool alternates = true;
                while (cur != start && steps <= cls_union.size()) {
                    VertexId next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                    bool next_in_h = std::binary_search(cyc.class_h.begin(), cyc.class_h.end(),
                                                        Edge(cur, next));
                    if (next_in_h == in_h)
                        alternates = false;
                    in_h = next_in_h;
                    prev = cur;
                    cur = next;
                    ++steps;
                }
                if (steps != 4 * r)
                    fail("not a single cycle of length 4r");
                if (!alternates)
                    fail("classes do not alternate along the cycle");
            }
            // class_h is exactly the in-gadget port pairs.
            std::vector<Edge> pairs;
            for (size_t t = 0; t < r; ++t) {
                auto [cj, slot] = cyc.occurrences[t];
                const ClauseBlock& b = art.blocks[static_cast<size_t>(cj - 1)];
                const PairGadget& pg = slot == 0 ? b.first : b.second;
                pairs.push_back(Edge(pg.v11, pg.v12));
                pairs.push_back(Edge(pg.v21, pg.v22));
            }
            std::sort(pairs.begin(), pairs.end());
            if (pairs != cyc.class_h)
                fail("class_h differs from the in-gadget port pairs");
            details += why.str();
        }
        check("cycles.structure", ok, details);
    }

    {
        bool ok = true;
        std::string details;
        for (int j = 1; j <= m; ++j) {
            ClauseResidualTable table = clause_residual_table(art, j, limits);
            if (!table.ok) {
                ok = false;
                std::ostringstream why;
                why << "clause " << j << ":";
                for (int aa = 0; aa < 2; ++aa)
                    for (int bb = 0; bb < 2; ++bb)
                        why << " (" << aa << "," << bb << ")->"
                            << table.beta[static_cast<size_t>(aa)][static_cast<size_t>(bb)]
                            << " want "
                            << table.expected[static_cast<size_t>(aa)][static_cast<size_t>(bb)];
                details += why.str() + "; ";
            }
        }
        check("clause_tables", ok, details);
    }

    auto all_assignments = [&]() {
        std::vector<Assignment> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Assignment eps(static_cast<size_t>(n), 0);
            for (int i = 0; i < n; ++i)
                eps[static_cast<size_t>(i)] = (mask >> (n - 1 - i)) & 1;
            out.push_back(std::move(eps));
        }
        return out;
    };

    if (n <= detail::kCensusMaxVars) {
        std::string details;
        bool ok = true;
        try {
            auto pms = enumerate_max_matchings(g, size_t{1} << n, limits);
            if (static_cast<int>(pms.size()) != (1 << n)) {
                ok = false;
                details = std::to_string(pms.size()) + " perfect matchings, want " +
                          std::to_string(1 << n);
            }
            std::set<Matching> expected;
            for (const Assignment& eps : all_assignments())
                expected.insert(assignment_to_matching(art, eps));
            std::set<Matching> got(pms.begin(), pms.end());
            if (got != expected) {
                ok = false;
                details += "; enumerated maximum matchings differ from {F_eps}";
            }
            for (const Matching& pm : pms) {
                Assignment eps = matching_to_assignment(art, pm);
                if (assignment_to_matching(art, eps) != pm) {
                    ok = false;
                    details += "; round trip failed on a perfect matching";
                    break;
                }
            }
        } catch (const EnumerationLimitError&) {
            ok = false;
            details = "more than 2^n maximum matchings";
        } catch (const std::exception& e) {
            ok = false;
            details = e.what();
        }
        check("census.perfect_matchings", ok, details);
    } else {
        skip("census.perfect_matchings",
             "n > " + std::to_string(detail::kCensusMaxVars) + ", census not enumerated");
    }

    const bool desk = n <= detail::kBehavioralMaxVars && m <= detail::kBehavioralMaxClauses;
    if (desk) {
        bool ok = true;
        std::string details;
        for (const Assignment& eps : all_assignments()) {
            Matching f = assignment_to_matching(art, eps);
            if (!is_matching(g, f) || 2 * static_cast<int>(f.size()) != g.vertex_count()) {
                ok = false;
                details += "F_eps not perfect for some eps; ";
                break;
            }
            int kprime = count_satisfied(art.instance, eps);
            int want = t1 ? 2 * m - 1 + 6 * kprime + 5 * (m - kprime)
                          : 2 * m - 1 + 5 * kprime + 6 * (m - kprime);
            int got = matching_number(g.without_edges(f), limits);
            if (got != want) {
                ok = false;
                std::ostringstream why;
                why << "eps=";
                for (auto b : eps)
                    why << int(b);
                why << ": residual " << got << " want " << want << "; ";
                details += why.str();
            }
        }
        check("accounting.identity", ok, details);
    } else {
        skip("accounting.identity", "beyond desk scale (n <= 4, m <= 6)");
    }

    if (desk) {
        MaxSatResult opt = max_sat_bruteforce(art.instance);
        bool ok = true;
        std::string details;
        for (int K = k_min; K <= k_max; ++K) {
            int k = t1 ? 7 * m + K - 1 : 8 * m - 1 - K;
            bool want = opt.optimum >= K;
            bool got = t1 ? decide_ge(g, k, limits).answer : decide_le(g, k, limits).answer;
            if (got != want) {
                ok = false;
                details += "K=" + std::to_string(K) + ": decision " + (got ? "yes" : "no") +
                           " but OPT=" + std::to_string(opt.optimum) + "; ";
            }
        }
        check("equivalence.end_to_end", ok, details);

        int identity = t1 ? max_residual(g, limits).value : min_residual(g, limits).value;
        int want_identity = t1 ? 7 * m - 1 + opt.optimum : 8 * m - 1 - opt.optimum;
        check("optima.identity", identity == want_identity,
              std::to_string(identity) + " want " + std::to_string(want_identity) +
                  " (OPT=" + std::to_string(opt.optimum) + ")");
    } else {
        skip("equivalence.end_to_end", "beyond desk scale (n <= 4, m <= 6)");
        skip("optima.identity", "beyond desk scale (n <= 4, m <= 6)");
    }

    return rep;
}

inline ValidationReport validate_reduction(const ReductionArtifact& art,
                                           const SearchLimits& limits = {}) {
    return validate_reduction(art, 1, art.m, limits);
}

}  // namespace resmatch
