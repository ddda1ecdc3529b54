// transform.hpp - Split-vertex transforms and subgraph utilities consumed by
// the cycle and reduction modules.

#ifndef KSSP_TRANSFORM_HPP
#define KSSP_TRANSFORM_HPP

#include <stdexcept>
#include <vector>

#include "kssp/graph.hpp"

namespace kssp {

// G'_z: z replaced by z_out (emits z's former out-edges) and z_in (receives
// its former in-edges), with no z_in->z_out edge. Simple cycles through z in
// g correspond one-to-one, weight for weight, to simple z_out->z_in paths.
struct SplitVertexResult {
    Graph graph;  // n+1 vertices: z_out reuses z's id, z_in is n+1
    VertexId z_out = 0;
    VertexId z_in = 0;
};

inline SplitVertexResult split_vertex(const Graph& g, VertexId z) {
    if (!g.directed()) throw std::invalid_argument("split_vertex: directed graphs only");
    if (z < 1 || z > g.vertex_count()) throw std::invalid_argument("split_vertex: bad vertex");
    const VertexId z_in = g.vertex_count() + 1;
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        Edge copy = e;
        if (copy.head == z) copy.head = z_in;
        edges.push_back(copy);
    }
    return {Graph::build(g.vertex_count() + 1, true, std::move(edges)), z, z_in};
}

// G': every x becomes x_in -> x_out (weight 0), every edge (u,v) becomes
// (u_out, v_in). x_out keeps x's id, x_in is n + x.
struct SplitAllResult {
    Graph graph;  // 2n vertices
    std::vector<VertexId> out_vertex;  // indexed by original id
    std::vector<VertexId> in_vertex;

    // Maps a split-graph vertex back to the original vertex.
    VertexId original(VertexId split_id) const {
        const VertexId n = static_cast<VertexId>(out_vertex.size() - 1);
        return split_id > n ? split_id - n : split_id;
    }
    bool is_out_copy(VertexId split_id) const {
        return split_id <= static_cast<VertexId>(out_vertex.size() - 1);
    }
};

inline SplitAllResult split_all(const Graph& g) {
    if (!g.directed()) throw std::invalid_argument("split_all: directed graphs only");
    const std::uint32_t n = g.vertex_count();
    SplitAllResult result;
    result.out_vertex.resize(n + 1);
    result.in_vertex.resize(n + 1);
    for (VertexId x = 1; x <= n; ++x) {
        result.out_vertex[x] = x;
        result.in_vertex[x] = n + x;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() + n);
    for (VertexId x = 1; x <= n; ++x) edges.push_back({n + x, x, 0});
    for (const Edge& e : g.edges()) edges.push_back({e.tail, n + e.head, e.weight});
    result.graph = Graph::build(2 * n, true, std::move(edges));
    return result;
}

// Directed view of an undirected graph: one arc per traversal direction.
// Directed inputs are returned unchanged.
inline Graph bidirected(const Graph& g) {
    if (g.directed()) return g;
    std::vector<Edge> edges;
    edges.reserve(2 * g.edge_count());
    for (const Edge& e : g.edges()) {
        edges.push_back(e);
        edges.push_back({e.head, e.tail, e.weight});
    }
    return Graph::build(g.vertex_count(), true, std::move(edges));
}

// Copy of g without the edges entering x.
inline Graph remove_in_edges(const Graph& g, VertexId x) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        if (e.head != x) edges.push_back(e);
    return Graph::build(g.vertex_count(), g.directed(), std::move(edges));
}

// Induced subgraph on a set of kept vertices, relabelled 1..|kept| in
// ascending original order.
struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> to_original;    // indexed by new id
    std::vector<VertexId> from_original;  // kNoVertex if dropped

    VertexId map_from(VertexId original_id) const { return from_original[original_id]; }
    VertexId map_to(VertexId new_id) const { return to_original[new_id]; }
};

inline InducedSubgraph induce(const Graph& g, std::vector<VertexId> kept) {
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    InducedSubgraph result;
    result.from_original.assign(g.vertex_count() + 1, kNoVertex);
    result.to_original.assign(kept.size() + 1, kNoVertex);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        result.to_original[i + 1] = kept[i];
        result.from_original[kept[i]] = static_cast<VertexId>(i + 1);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        VertexId t = result.from_original[e.tail];
        VertexId h = result.from_original[e.head];
        if (t != kNoVertex && h != kNoVertex) edges.push_back({t, h, e.weight});
    }
    result.graph =
        Graph::build(static_cast<std::uint32_t>(kept.size()), g.directed(), std::move(edges));
    return result;
}

// Vertices with label >= min_label.
inline InducedSubgraph induce_min_label(const Graph& g, VertexId min_label) {
    std::vector<VertexId> kept;
    for (VertexId v = min_label; v <= g.vertex_count(); ++v) kept.push_back(v);
    return induce(g, std::move(kept));
}

}  // namespace kssp

#endif  // KSSP_TRANSFORM_HPP
