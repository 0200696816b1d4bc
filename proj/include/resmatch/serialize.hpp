#pragma once

// JSON forms consumed by the CLI and the golden tests. All emitters produce
// deterministic, byte-stable output: containers are kept sorted and keys are
// emitted in insertion order.

#include <string>

#include "resmatch/graph_io.hpp"
#include "resmatch/reduction.hpp"
#include "resmatch/residual.hpp"
#include "resmatch/validate.hpp"

namespace resmatch {

inline Json matching_to_json(const Matching& m) {
    Json out = Json::array();
    for (const Edge& e : m)
        out.push_back(Json::array({e.u, e.v}));
    return out;
}

inline Matching matching_from_json(const Json& j) {
    Matching m;
    for (const Json& pair : j)
        m.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    return normalized(std::move(m));
}

inline Json summary_to_json(const ResidualSummary& s) {
    Json out;
    out["beta"] = s.beta;
    out["min"] = s.min_residual;
    out["max"] = s.max_residual;
    out["min_witness"] = matching_to_json(s.min_witness);
    out["max_witness"] = matching_to_json(s.max_witness);
    return out;
}

inline std::string role_name(VertexRole r) {
    switch (r) {
    case VertexRole::Spine: return "spine";
    case VertexRole::UBlock: return "u";
    case VertexRole::Port: return "port";
    }
    return "?";
}

inline Json artifact_to_json(const ReductionArtifact& art) {
    Json out = graph_to_json(art.graph);
    Json meta;
    meta["theorem"] = static_cast<int>(art.theorem);
    meta["k"] = art.k;
    meta["K"] = art.K;
    meta["m"] = art.m;
    meta["n"] = art.n;
    Json blocks = Json::array();
    for (const ClauseBlock& b : art.blocks) {
        Json jb;
        jb["index"] = b.index;
        jb["vertices"] = b.vertices;
        Json edges = Json::array();
        std::vector<Edge> sorted = b.edges;
        std::sort(sorted.begin(), sorted.end());
        for (const Edge& e : sorted)
            edges.push_back(Json::array({e.u, e.v}));
        jb["edges"] = std::move(edges);
        blocks.push_back(std::move(jb));
    }
    meta["clause_blocks"] = std::move(blocks);
    Json cycles = Json::array();
    for (const VariableCycle& c : art.cycles) {
        Json jc;
        jc["variable"] = c.variable;
        jc["class_h"] = matching_to_json(c.class_h);
        jc["class_v"] = matching_to_json(c.class_v);
        cycles.push_back(std::move(jc));
    }
    meta["cycles"] = std::move(cycles);
    Json roles = Json::array();
    for (VertexRole r : art.roles)
        roles.push_back(role_name(r));
    meta["roles"] = std::move(roles);
    {
        std::vector<Edge> sorted = art.connector_edges;
        std::sort(sorted.begin(), sorted.end());
        meta["connector_edges"] = matching_to_json(sorted);
    }
    out["meta"] = std::move(meta);
    return out;
}

inline Json report_to_json(const ValidationReport& rep) {
    Json out;
    out["theorem"] = rep.theorem;
    out["K_range"] = Json::array({rep.k_min, rep.k_max});
    out["pass"] = rep.all_pass();
    Json checks = Json::array();
    for (const ValidationCheck& c : rep.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (c.skipped)
            jc["skipped"] = true;
        if (!c.details.empty())
            jc["details"] = c.details;
        checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    out["reproducer"] = rep.reproducer_dimacs;
    return out;
}

}  // namespace resmatch
