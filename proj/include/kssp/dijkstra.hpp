// dijkstra.hpp - Single-source shortest paths over PathWeight keys.

#ifndef KSSP_DIJKSTRA_HPP
#define KSSP_DIJKSTRA_HPP

#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "kssp/graph.hpp"

namespace kssp {

struct ShortestPathTree {
    VertexId source = 0;
    std::vector<PathWeight> dist;     // indexed 1..n; infinity if unreachable
    std::vector<EdgeId> parent_edge;  // kNoEdge for source and unreachable
    std::vector<VertexId> parent;     // kNoVertex for source and unreachable

    bool reachable(VertexId v) const { return !dist[v].is_infinite(); }

    // Vertex sequence source..v; empty if v is unreachable.
    std::vector<VertexId> path_to(VertexId v) const {
        if (!reachable(v)) return {};
        std::vector<VertexId> seq;
        for (VertexId u = v; u != kNoVertex; u = parent[u]) seq.push_back(u);
        std::reverse(seq.begin(), seq.end());
        return seq;
    }
};

// Dijkstra with (weight, edge count) distances. Vertices settle in
// (distance, vertex id) order; parents change only on strict improvement,
// which makes the tree deterministic for a given graph.
inline ShortestPathTree sssp_excluding(const Graph& g, VertexId s,
                                       std::span<const EdgeId> banned_edges) {
    const std::uint32_t n = g.vertex_count();
    ShortestPathTree tree;
    tree.source = s;
    tree.dist.assign(n + 1, PathWeight::infinity());
    tree.parent_edge.assign(n + 1, kNoEdge);
    tree.parent.assign(n + 1, kNoVertex);

    auto is_banned = [&](EdgeId e) {
        for (EdgeId b : banned_edges)
            if (b == e) return true;
        return false;
    };

    using Item = std::pair<PathWeight, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    std::vector<char> settled(n + 1, 0);
    tree.dist[s] = {0, 0};
    queue.push({{0, 0}, s});

    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (settled[u]) continue;
        settled[u] = 1;
        for (const Graph::Arc& a : g.out_arcs(u)) {
            if (settled[a.to] || is_banned(a.edge)) continue;
            PathWeight cand = d.extended(a.weight);
            if (cand < tree.dist[a.to]) {
                tree.dist[a.to] = cand;
                tree.parent_edge[a.to] = a.edge;
                tree.parent[a.to] = u;
                queue.push({cand, a.to});
            }
        }
    }
    return tree;
}

inline ShortestPathTree sssp(const Graph& g, VertexId s) {
    return sssp_excluding(g, s, {});
}

}  // namespace kssp

#endif  // KSSP_DIJKSTRA_HPP
