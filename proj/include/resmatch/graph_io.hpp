#pragma once

// Graph file I/O. The JSON layout is
//   {"vertices": [{"id": 0, "x": -1, "y": 1}, ...], "edges": [[0,1], ...]}
// with ids dense 0..N-1 and x/y either both present or both null per vertex.
// DOT output is for visualization only and is never parsed back.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "resmatch/graph.hpp"

namespace resmatch {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphFile {
    Graph graph;
    // Present iff every vertex carried coordinates.
    std::optional<std::vector<Coord>> coords;

    EmbeddedGraph embedded() const {
        if (!coords)
            throw IoError("graph file carries no coordinates");
        return EmbeddedGraph(graph, *coords);
    }
};

inline Json graph_to_json(const Graph& g, const std::vector<Coord>* coords = nullptr) {
    Json vertices = Json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Json item;
        item["id"] = v;
        if (coords) {
            item["x"] = (*coords)[static_cast<size_t>(v)].x;
            item["y"] = (*coords)[static_cast<size_t>(v)].y;
        } else {
            item["x"] = nullptr;
            item["y"] = nullptr;
        }
        vertices.push_back(std::move(item));
    }
    Json edges = Json::array();
    for (const Edge& e : g.edges())
        edges.push_back(Json::array({e.u, e.v}));
    Json out;
    out["vertices"] = std::move(vertices);
    out["edges"] = std::move(edges);
    return out;
}

inline Json graph_to_json(const EmbeddedGraph& eg) {
    return graph_to_json(eg.graph(), &eg.coords());
}

// Accepts any object with "vertices"/"edges"; extra keys (such as the
// reduction's "meta") are ignored so artifact files parse as plain graphs.
inline GraphFile graph_from_json(const Json& j);

namespace detail {
inline GraphFile graph_from_json_impl(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw IoError("graph json must be an object with vertices and edges");
    const Json& vs = j.at("vertices");
    const Json& es = j.at("edges");
    if (!vs.is_array() || !es.is_array())
        throw IoError("vertices and edges must be arrays");
    int n = static_cast<int>(vs.size());
    std::vector<bool> id_seen(static_cast<size_t>(n), false);
    std::vector<Coord> coords(static_cast<size_t>(n));
    int with_coords = 0;
    for (const Json& item : vs) {
        if (!item.is_object() || !item.contains("id"))
            throw IoError("vertex entry must be an object with an id");
        int id = item.at("id").get<int>();
        if (id < 0 || id >= n || id_seen[static_cast<size_t>(id)])
            throw IoError("vertex ids must be unique and dense 0..N-1");
        id_seen[static_cast<size_t>(id)] = true;
        bool has_x = item.contains("x") && !item.at("x").is_null();
        bool has_y = item.contains("y") && !item.at("y").is_null();
        if (has_x != has_y)
            throw IoError("vertex " + std::to_string(id) + " has only one coordinate");
        if (has_x) {
            coords[static_cast<size_t>(id)] = Coord{item.at("x").get<int>(), item.at("y").get<int>()};
            ++with_coords;
        }
    }
    std::vector<Edge> edges;
    edges.reserve(es.size());
    for (const Json& pair : es) {
        if (!pair.is_array() || pair.size() != 2)
            throw IoError("edge entry must be a pair [u, v]");
        edges.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    }
    GraphFile out;
    try {
        out.graph = Graph(n, std::move(edges));
    } catch (const GraphError& e) {
        throw IoError(std::string("invalid graph: ") + e.what());
    }
    if (with_coords == n)
        out.coords = std::move(coords);
    else if (with_coords != 0)
        throw IoError("coordinates must be given for all vertices or none");
    return out;
}
}  // namespace detail

inline GraphFile graph_from_json(const Json& j) {
    try {
        return detail::graph_from_json_impl(j);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed graph json: ") + e.what());
    }
}

inline GraphFile parse_graph(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("bad json: ") + e.what());
    }
    return graph_from_json(j);
}

inline GraphFile load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    out << text;
}

inline std::string to_dot(const Graph& g, const std::vector<Coord>* coords = nullptr) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << v << "\"";
        if (coords)
            out << " pos=\"" << (*coords)[static_cast<size_t>(v)].x << ","
                << (*coords)[static_cast<size_t>(v)].y << "!\"";
        out << "];\n";
    }
    for (const Edge& e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const EmbeddedGraph& eg) {
    return to_dot(eg.graph(), &eg.coords());
}

}  // namespace resmatch
